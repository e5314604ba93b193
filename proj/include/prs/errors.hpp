#pragma once

#include <stdexcept>
#include <string>

namespace prs {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad inputs: invalid assignments, schema mismatches, malformed encodings,
// shape mismatches, bad manifests.
struct ValidationError : Error {
  using Error::Error;
};

// A space cannot be enumerated (float decisions present or cap exceeded).
struct NotEnumerableError : Error {
  using Error::Error;
};

// Too little data for the requested operation (short curves, tiny batches).
struct InsufficientDataError : Error {
  using Error::Error;
};

// Numeric failures: singular fits, divergent training, non-finite rewards.
struct NumericError : Error {
  using Error::Error;
};

// Trial-log problems: duplicates, schema drift, corrupt records.
struct StoreError : Error {
  using Error::Error;
};

}  // namespace prs
