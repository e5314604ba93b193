#include "prs/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "prs/errors.hpp"
#include "prs/rng.hpp"

namespace prs {

using nlohmann::json;

namespace {

std::string format_value(const ConfigValue& v) {
  if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(v));
  return buf;
}

}  // namespace

Decision Decision::categorical(std::string name, std::vector<std::string> values) {
  if (values.size() < 2)
    throw ValidationError("decision '" + name + "' needs at least 2 values");
  std::set<std::string> uniq(values.begin(), values.end());
  if (uniq.size() != values.size())
    throw ValidationError("decision '" + name + "' has duplicate values");
  Decision d;
  d.name = std::move(name);
  d.kind = Kind::Categorical;
  d.values = std::move(values);
  return d;
}

Decision Decision::real(std::string name, double min, double max) {
  if (!(min < max))
    throw ValidationError("decision '" + name + "' needs min < max");
  Decision d;
  d.name = std::move(name);
  d.kind = Kind::Float;
  d.min = min;
  d.max = max;
  return d;
}

std::size_t Decision::index_of(const std::string& label) const {
  auto it = std::find(values.begin(), values.end(), label);
  if (it == values.end())
    throw ValidationError("invalid assignment: decision '" + name + "' has no value '" + label + "'");
  return static_cast<std::size_t>(it - values.begin());
}

SearchSpace::SearchSpace(std::string name, int version, std::vector<Decision> decisions)
    : name_(std::move(name)), version_(version), decisions_(std::move(decisions)) {
  if (decisions_.empty()) throw ValidationError("search space '" + name_ + "' has no decisions");
  std::set<std::string> names;
  width_ = 0;
  for (const auto& d : decisions_) {
    if (!names.insert(d.name).second)
      throw ValidationError("duplicate decision name '" + d.name + "'");
    width_ += d.kind == Decision::Kind::Categorical ? d.cardinality() : 1;
  }
}

const Decision& SearchSpace::decision(const std::string& name) const {
  for (const auto& d : decisions_)
    if (d.name == name) return d;
  throw ValidationError("unknown decision '" + name + "'");
}

bool SearchSpace::all_categorical() const {
  return std::all_of(decisions_.begin(), decisions_.end(),
                     [](const Decision& d) { return d.kind == Decision::Kind::Categorical; });
}

SearchSpace SearchSpace::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad space JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("decisions"))
    throw ValidationError("space JSON must have name and decisions");
  std::vector<Decision> ds;
  for (const auto& dj : j.at("decisions")) {
    std::string name = dj.at("name").get<std::string>();
    std::string kind = dj.at("kind").get<std::string>();
    if (kind == "categorical") {
      ds.push_back(Decision::categorical(name, dj.at("values").get<std::vector<std::string>>()));
    } else if (kind == "float") {
      auto b = dj.at("bounds");
      ds.push_back(Decision::real(name, b.at(0).get<double>(), b.at(1).get<double>()));
    } else {
      throw ValidationError("decision '" + name + "' has unknown kind '" + kind + "'");
    }
  }
  return SearchSpace(j.at("name").get<std::string>(), j.value("version", 1), std::move(ds));
}

std::string SearchSpace::to_json() const {
  json j;
  j["name"] = name_;
  j["version"] = version_;
  j["decisions"] = json::array();
  for (const auto& d : decisions_) {
    json dj;
    dj["name"] = d.name;
    if (d.kind == Decision::Kind::Categorical) {
      dj["kind"] = "categorical";
      dj["values"] = d.values;
    } else {
      dj["kind"] = "float";
      dj["bounds"] = {d.min, d.max};
    }
    j["decisions"].push_back(dj);
  }
  return j.dump();
}

void validate_config(const SearchSpace& space, const Config& config) {
  std::vector<std::string> missing, extra;
  for (const auto& d : space.decisions())
    if (!config.assignments.count(d.name)) missing.push_back(d.name);
  for (const auto& [name, value] : config.assignments) {
    bool known = false;
    for (const auto& d : space.decisions())
      if (d.name == name) known = true;
    if (!known) extra.push_back(name);
  }
  if (!missing.empty() || !extra.empty()) {
    std::string msg = "config does not match space schema;";
    if (!missing.empty()) {
      msg += " missing:";
      for (const auto& n : missing) msg += " " + n;
    }
    if (!extra.empty()) {
      msg += " extra:";
      for (const auto& n : extra) msg += " " + n;
    }
    throw ValidationError(msg);
  }
  for (const auto& d : space.decisions()) {
    const ConfigValue& v = config.assignments.at(d.name);
    if (d.kind == Decision::Kind::Categorical) {
      if (!std::holds_alternative<std::string>(v))
        throw ValidationError("decision '" + d.name + "' expects a categorical label");
      d.index_of(std::get<std::string>(v));
    } else {
      if (!std::holds_alternative<double>(v))
        throw ValidationError("decision '" + d.name + "' expects a number");
      double x = std::get<double>(v);
      if (!(x >= d.min && x <= d.max))
        throw ValidationError("invalid assignment: '" + d.name + "' = " + format_value(v) +
                              " outside bounds");
    }
  }
}

std::string config_id(const SearchSpace& space, const Config& config) {
  // assignments are already sorted by name (std::map)
  std::uint64_t h = fnv1a("v" + std::to_string(space.version()));
  for (const auto& [name, value] : config.assignments) {
    h = fnv1a(name + "=" + format_value(value) + ";", h);
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string config_to_json(const Config& config) {
  json j = json::object();
  for (const auto& [name, value] : config.assignments) {
    if (std::holds_alternative<std::string>(value))
      j[name] = std::get<std::string>(value);
    else
      j[name] = std::get<double>(value);
  }
  return j.dump();
}

Config config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad config JSON: ") + e.what());
  }
  Config c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_string())
      c.assignments[it.key()] = it.value().get<std::string>();
    else if (it.value().is_number())
      c.assignments[it.key()] = it.value().get<double>();
    else
      throw ValidationError("config value for '" + it.key() + "' must be string or number");
  }
  return c;
}

std::vector<double> encode_onehot(const Decision& decision, const std::string& choice) {
  if (decision.kind != Decision::Kind::Categorical)
    throw ValidationError("encode_onehot: decision '" + decision.name + "' is not categorical");
  std::vector<double> block(decision.cardinality(), 0.0);
  block[decision.index_of(choice)] = 1.0;
  return block;
}

double encode_float(const Decision& decision, double x) {
  if (decision.kind != Decision::Kind::Float)
    throw ValidationError("encode_float: decision '" + decision.name + "' is not float");
  if (!(x >= decision.min && x <= decision.max))
    throw ValidationError("invalid assignment: '" + decision.name + "' = " +
                          std::to_string(x) + " outside bounds");
  return (x - decision.min) / (decision.max - decision.min);
}

std::vector<double> encode_config(const SearchSpace& space, const Config& config) {
  validate_config(space, config);
  std::vector<double> out;
  out.reserve(space.encoding_width());
  for (const auto& d : space.decisions()) {
    const ConfigValue& v = config.assignments.at(d.name);
    if (d.kind == Decision::Kind::Categorical) {
      auto block = encode_onehot(d, std::get<std::string>(v));
      out.insert(out.end(), block.begin(), block.end());
    } else {
      out.push_back(encode_float(d, std::get<double>(v)));
    }
  }
  return out;
}

Config decode_config(const SearchSpace& space, const std::vector<double>& v) {
  if (v.size() != space.encoding_width())
    throw ValidationError("malformed encoding: width " + std::to_string(v.size()) +
                          " != " + std::to_string(space.encoding_width()));
  Config c;
  std::size_t pos = 0;
  constexpr double kEps = 1e-9;
  for (const auto& d : space.decisions()) {
    if (d.kind == Decision::Kind::Categorical) {
      double sum = 0.0;
      std::size_t hot = d.cardinality();
      for (std::size_t i = 0; i < d.cardinality(); ++i) {
        double x = v[pos + i];
        if (std::abs(x) > kEps && std::abs(x - 1.0) > kEps)
          throw ValidationError("malformed encoding: one-hot block for '" + d.name +
                                "' has entry " + std::to_string(x));
        sum += x;
        if (std::abs(x - 1.0) <= kEps) hot = i;
      }
      if (std::abs(sum - 1.0) > kEps || hot == d.cardinality())
        throw ValidationError("malformed encoding: one-hot block for '" + d.name +
                              "' sums to " + std::to_string(sum));
      c.assignments[d.name] = d.values[hot];
      pos += d.cardinality();
    } else {
      double x = v[pos];
      if (x < -kEps || x > 1.0 + kEps)
        throw ValidationError("malformed encoding: float slot for '" + d.name + "' = " +
                              std::to_string(x));
      c.assignments[d.name] = d.min + std::clamp(x, 0.0, 1.0) * (d.max - d.min);
      pos += 1;
    }
  }
  return c;
}

Config random_config(const SearchSpace& space, std::uint64_t seed) {
  auto g = substream(seed, "random_config");
  Config c;
  for (const auto& d : space.decisions()) {
    if (d.kind == Decision::Kind::Categorical) {
      c.assignments[d.name] = d.values[uniform_index(g, d.cardinality())];
    } else {
      c.assignments[d.name] = uniform(g, d.min, d.max);
    }
  }
  return c;
}

std::size_t space_cardinality(const SearchSpace& space, std::size_t cap) {
  if (!space.all_categorical())
    throw NotEnumerableError("space '" + space.name() + "' has float decisions");
  std::size_t total = 1;
  for (const auto& d : space.decisions()) {
    if (total > cap / d.cardinality() + 1) total = cap + 1;
    else total *= d.cardinality();
    if (total > cap)
      throw NotEnumerableError("space '" + space.name() + "' exceeds enumeration cap " +
                               std::to_string(cap));
  }
  return total;
}

std::vector<Config> enumerate_configs(const SearchSpace& space, std::size_t cap) {
  std::size_t total = space_cardinality(space, cap);
  const auto& ds = space.decisions();
  std::vector<std::size_t> idx(ds.size(), 0);
  std::vector<Config> out;
  out.reserve(total);
  for (;;) {
    Config c;
    for (std::size_t i = 0; i < ds.size(); ++i)
      c.assignments[ds[i].name] = ds[i].values[idx[i]];
    out.push_back(std::move(c));
    // odometer: last decision fastest, so order is lexicographic in decision order
    std::size_t i = ds.size();
    while (i > 0) {
      --i;
      if (++idx[i] < ds[i].cardinality()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace prs
