#include "prs/space.hpp"

#include <gtest/gtest.h>

#include <set>

#include "prs/errors.hpp"

using namespace prs;

namespace {

SearchSpace two_cat() {
  return SearchSpace("toy", 1,
                     {Decision::categorical("d0", {"a", "b"}),
                      Decision::categorical("d1", {"x", "y", "z"})});
}

SearchSpace binary_space(int n, int version = 1) {
  std::vector<Decision> ds;
  for (int i = 0; i < n; ++i) {
    char name[8];
    std::snprintf(name, sizeof(name), "d%02d", i);
    ds.push_back(Decision::categorical(name, {"off", "on"}));
  }
  return SearchSpace("bin", version, std::move(ds));
}

}  // namespace

TEST(Decision, InvariantsEnforced) {
  EXPECT_THROW(Decision::categorical("d", {"only"}), ValidationError);
  EXPECT_THROW(Decision::categorical("d", {"a", "a"}), ValidationError);
  EXPECT_THROW(Decision::real("f", 1.0, 1.0), ValidationError);
  EXPECT_THROW(SearchSpace("s", 1, {}), ValidationError);
  EXPECT_THROW(SearchSpace("s", 1,
                           {Decision::categorical("d", {"a", "b"}),
                            Decision::categorical("d", {"c", "d"})}),
               ValidationError);
}

TEST(EncodeOnehot, Examples) {
  auto d3 = Decision::categorical("p", {"a", "b", "c"});
  EXPECT_EQ(encode_onehot(d3, "b"), (std::vector<double>{0, 1, 0}));
  auto d2 = Decision::categorical("p", {"a", "b"});
  EXPECT_EQ(encode_onehot(d2, "a"), (std::vector<double>{1, 0}));
  auto d4 = Decision::categorical("p", {"a", "b", "c", "d"});
  EXPECT_EQ(encode_onehot(d4, "d"), (std::vector<double>{0, 0, 0, 1}));
  EXPECT_THROW(encode_onehot(d3, "nope"), ValidationError);
}

TEST(EncodeFloat, Examples) {
  auto f = Decision::real("f", 0.0, 10.0);
  EXPECT_DOUBLE_EQ(encode_float(f, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(encode_float(f, 10.0), 1.0);
  auto lr = Decision::real("lr", 0.001, 0.1);
  EXPECT_NEAR(encode_float(lr, 0.0505), 0.5, 1e-12);
  EXPECT_THROW(encode_float(f, -0.1), ValidationError);
}

TEST(EncodeConfig, ConcatenationLayout) {
  auto space = two_cat();
  Config c{{{"d0", "b"}, {"d1", "x"}}};
  EXPECT_EQ(encode_config(space, c), (std::vector<double>{0, 1, 1, 0, 0}));

  SearchSpace mixed("m", 1,
                    {Decision::real("f", 0.0, 1.0), Decision::categorical("c", {"a", "b"})});
  Config mc{{{"f", 0.25}, {"c", "b"}}};
  EXPECT_EQ(encode_config(mixed, mc), (std::vector<double>{0.25, 0, 1}));
  EXPECT_EQ(mixed.encoding_width(), 3u);
}

TEST(EncodeConfig, SchemaMismatchListsNames) {
  auto space = two_cat();
  Config missing{{{"d0", "a"}}};
  try {
    encode_config(space, missing);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("d1"), std::string::npos);
  }
  Config extra{{{"d0", "a"}, {"d1", "x"}, {"zz", "q"}}};
  try {
    encode_config(space, extra);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(DecodeConfig, InverseAndErrors) {
  auto space = two_cat();
  Config c = decode_config(space, {0, 1, 1, 0, 0});
  EXPECT_EQ(std::get<std::string>(c.assignments.at("d0")), "b");
  EXPECT_EQ(std::get<std::string>(c.assignments.at("d1")), "x");

  SearchSpace fs("f", 1, {Decision::real("f", 0.0, 10.0), Decision::categorical("c", {"a", "b"})});
  Config fc = decode_config(fs, {0.5, 1, 0});
  EXPECT_DOUBLE_EQ(std::get<double>(fc.assignments.at("f")), 5.0);

  SearchSpace one("o", 1, {Decision::categorical("c", {"a", "b"})});
  EXPECT_THROW(decode_config(one, {0.4, 0.6}), ValidationError);
  EXPECT_THROW(decode_config(one, {1, 1}), ValidationError);
  EXPECT_THROW(decode_config(one, {1}), ValidationError);
}

TEST(RoundTrip, RandomConfigsProperty) {
  SearchSpace space("rt", 3,
                    {Decision::categorical("c0", {"a", "b", "c"}),
                     Decision::real("f0", -2.0, 7.0),
                     Decision::categorical("c1", {"p", "q"}),
                     Decision::real("f1", 0.001, 0.1)});
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Config c = random_config(space, seed);
    Config back = decode_config(space, encode_config(space, c));
    for (const auto& [name, v] : c.assignments) {
      if (std::holds_alternative<std::string>(v)) {
        EXPECT_EQ(std::get<std::string>(v), std::get<std::string>(back.assignments.at(name)));
      } else {
        EXPECT_NEAR(std::get<double>(v), std::get<double>(back.assignments.at(name)), 1e-9);
      }
    }
  }
}

TEST(RandomConfig, DeterministicAndUniform) {
  auto space = binary_space(4);
  EXPECT_EQ(random_config(space, 42), random_config(space, 42));
  EXPECT_NE(random_config(space, 42), random_config(space, 43));

  int on = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    Config c = random_config(space, 1000 + i);
    if (std::get<std::string>(c.assignments.at("d00")) == "on") ++on;
  }
  double frac = static_cast<double>(on) / n;
  EXPECT_GE(frac, 0.47);
  EXPECT_LE(frac, 0.53);
}

TEST(Enumerate, CountsAndOrder) {
  SearchSpace s34("s", 1,
                  {Decision::categorical("a", {"1", "2", "3"}),
                   Decision::categorical("b", {"1", "2", "3", "4"})});
  EXPECT_EQ(enumerate_configs(s34).size(), 12u);

  SearchSpace s2("s", 1, {Decision::categorical("a", {"a", "b"})});
  auto seq = enumerate_configs(s2);
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(std::get<std::string>(seq[0].assignments.at("a")), "a");
  EXPECT_EQ(std::get<std::string>(seq[1].assignments.at("a")), "b");

  EXPECT_EQ(space_cardinality(binary_space(18)), 262144u);
  EXPECT_EQ(enumerate_configs(binary_space(18)).size(), 262144u);
}

TEST(Enumerate, NoDuplicatesAndErrors) {
  auto space = binary_space(10);
  auto all = enumerate_configs(space);
  std::set<std::string> ids;
  for (const auto& c : all) ids.insert(config_id(space, c));
  EXPECT_EQ(ids.size(), all.size());

  SearchSpace fs("f", 1, {Decision::real("x", 0.0, 1.0)});
  EXPECT_THROW(enumerate_configs(fs), NotEnumerableError);
  EXPECT_THROW(enumerate_configs(binary_space(21), 1000000), NotEnumerableError);
}

TEST(ConfigId, CanonicalAcrossInsertionOrder) {
  auto space = two_cat();
  Config c1, c2;
  c1.assignments["d0"] = std::string("a");
  c1.assignments["d1"] = std::string("y");
  c2.assignments["d1"] = std::string("y");
  c2.assignments["d0"] = std::string("a");
  EXPECT_EQ(config_id(space, c1), config_id(space, c2));

  SearchSpace v2("toy", 2, space.decisions());
  EXPECT_NE(config_id(space, c1), config_id(v2, c1));
}

TEST(SpaceJson, RoundTripAndFieldOrderInsensitive) {
  auto space = SearchSpace::from_json(R"({
    "version": 3,
    "decisions": [
      {"kind": "categorical", "name": "mod", "values": ["linear", "conv"]},
      {"name": "lr", "bounds": [0.001, 0.1], "kind": "float"}
    ],
    "name": "demo"
  })");
  EXPECT_EQ(space.name(), "demo");
  EXPECT_EQ(space.version(), 3);
  EXPECT_EQ(space.encoding_width(), 3u);

  auto back = SearchSpace::from_json(space.to_json());
  EXPECT_EQ(back.to_json(), space.to_json());

  Config c = config_from_json(R"({"mod": "conv", "lr": 0.01})");
  EXPECT_EQ(config_from_json(config_to_json(c)), c);
  EXPECT_THROW(SearchSpace::from_json("{not json"), ValidationError);
}
