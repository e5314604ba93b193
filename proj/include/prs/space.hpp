#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace prs {

using ConfigValue = std::variant<std::string, double>;

// A single tunable: either a categorical choice set or a bounded float.
struct Decision {
  enum class Kind { Categorical, Float };

  std::string name;
  Kind kind = Kind::Categorical;
  std::vector<std::string> values;  // categorical labels, ordered
  double min = 0.0, max = 0.0;      // float bounds

  static Decision categorical(std::string name, std::vector<std::string> values);
  static Decision real(std::string name, double min, double max);

  std::size_t cardinality() const { return values.size(); }
  std::size_t index_of(const std::string& label) const;  // throws ValidationError
};

// Ordered decision schema. Decision order fixes the encoding layout; the
// version stamps stored artifacts so schema drift is detectable.
class SearchSpace {
 public:
  SearchSpace() = default;
  SearchSpace(std::string name, int version, std::vector<Decision> decisions);

  const std::string& name() const { return name_; }
  int version() const { return version_; }
  const std::vector<Decision>& decisions() const { return decisions_; }
  const Decision& decision(const std::string& name) const;
  std::size_t encoding_width() const { return width_; }
  bool all_categorical() const;

  static SearchSpace from_json(const std::string& text);
  std::string to_json() const;

 private:
  std::string name_;
  int version_ = 1;
  std::vector<Decision> decisions_;
  std::size_t width_ = 0;
};

// One concrete point in a space: exactly one assignment per decision.
struct Config {
  std::map<std::string, ConfigValue> assignments;

  bool operator==(const Config& other) const { return assignments == other.assignments; }
  bool operator<(const Config& other) const { return assignments < other.assignments; }
};

void validate_config(const SearchSpace& space, const Config& config);

// Canonical id: fnv-1a over (space version, sorted name=value pairs).
std::string config_id(const SearchSpace& space, const Config& config);

std::string config_to_json(const Config& config);
Config config_from_json(const std::string& text);

// One-hot block for a categorical decision.
std::vector<double> encode_onehot(const Decision& decision, const std::string& choice);

// Min-max normalization of a float decision into [0,1].
double encode_float(const Decision& decision, double x);

// Concatenated encoding in decision order.
std::vector<double> encode_config(const SearchSpace& space, const Config& config);

// Inverse of encode_config. Throws ValidationError on malformed encodings.
Config decode_config(const SearchSpace& space, const std::vector<double>& v);

// Uniform independent draw per decision; deterministic for a fixed seed.
Config random_config(const SearchSpace& space, std::uint64_t seed);

// Every config of an all-categorical space in lexicographic decision order.
// Throws NotEnumerableError if a float decision is present or the product of
// cardinalities exceeds `cap`.
std::vector<Config> enumerate_configs(const SearchSpace& space, std::size_t cap = 1000000);

std::size_t space_cardinality(const SearchSpace& space, std::size_t cap = 1000000);

}  // namespace prs
