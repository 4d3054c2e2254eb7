#include <random>

#include "doctest.h"

#include "itemq/generators.hpp"
#include "itemq/io.hpp"

using namespace itemq;

namespace {

const std::string kGolden = ITEMQ_GOLDEN_DIR;

const char* kIntro = R"({
  "attributes": ["a", "b"],
  "constraints": [
    {"itemset": [], "frequency": "1"},
    {"itemset": ["a"], "frequency": "0.6"},
    {"itemset": ["b"], "frequency": "1/2"}
  ],
  "query": ["b", "a"],
  "threshold": "1/4"
})";

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("6/10") == Rational(3, 5));
  CHECK(parse_rational("0.6") == Rational(3, 5));
  CHECK(parse_rational("1") == 1);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "0.5.1", "1e3", "1 /2"})
    CHECK_THROWS_AS(parse_rational(bad), MalformedInput);
  CHECK(to_string(Rational(1, 10)) == "1/10");
  CHECK(to_string(Rational(1)) == "1");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_double(Rational(1, 4)) == 0.25);
  CHECK(dyadic(3) == Rational(1, 8));
}

TEST_CASE("instance parsing") {
  const auto inst = io::parse_instance(kIntro);
  CHECK(inst.attributes == std::vector<std::string>{"a", "b"});
  CHECK(inst.family.size() == 3);
  CHECK(inst.theta[1] == Rational(3, 5));
  CHECK(inst.query == Itemset{0, 1});
  CHECK(inst.threshold == Rational(1, 4));

  const auto bare = io::parse_instance(R"({"attributes": ["x"], "constraints": [{"itemset": ["x"], "frequency": 0}]})");
  CHECK_FALSE(bare.query);
  CHECK_FALSE(bare.threshold);
  CHECK(bare.theta[0] == 0);
}

TEST_CASE("instance errors") {
  const char* cases[] = {
      "not json",
      R"([])",
      R"({"constraints": []})",
      R"({"attributes": ["a", "a"], "constraints": []})",
      R"({"attributes": [""], "constraints": []})",
      R"({"attributes": ["a,b"], "constraints": []})",
      R"({"attributes": ["a"], "constraints": [{"itemset": ["z"], "frequency": "1/2"}]})",
      R"({"attributes": ["a"], "constraints": [{"itemset": ["a"], "frequency": "3/2"}]})",
      R"({"attributes": ["a"], "constraints": [{"itemset": ["a"], "frequency": "-1/2"}]})",
      R"({"attributes": ["a"], "constraints": [{"itemset": ["a"], "frequency": 0.5}]})",
      R"({"attributes": ["a"], "constraints": [{"itemset": ["a"]}]})",
      R"({"attributes": ["a"], "constraints": [{"itemset": ["a"], "frequency": "1/2"},
                                                {"itemset": ["a"], "frequency": "1/2"}]})",
      R"({"attributes": ["a"], "constraints": [], "query": ["q"]})",
      R"({"attributes": ["a"], "constraints": [], "threshold": "x"})",
  };
  for (const char* text : cases) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::parse_instance(text), MalformedInput);
  }
  CHECK_THROWS_AS(io::read_instance(kGolden + "/does-not-exist.json"), MalformedInput);
}

TEST_CASE("golden emission of the two-clause reduction") {
  const auto formula = parse_dimacs(io::read_file(kGolden + "/two_clause.cnf"));
  CHECK(io::emit_instance(io::to_instance(reduce_max_query(formula))) ==
        io::read_file(kGolden + "/two_clause_maxquery.json"));
  CHECK(io::emit_instance(io::to_instance(reduce_consistent(formula))) ==
        io::read_file(kGolden + "/two_clause_consistent.json"));
  // Golden files parse back to the same instance.
  const auto parsed = io::read_instance(kGolden + "/two_clause_maxquery.json");
  CHECK(parsed == io::to_instance(reduce_max_query(formula)));
}

TEST_CASE("property: emit then parse is the identity") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    const int k = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto gen = oracle::random_consistent_instance(rng, k);
    io::Instance inst;
    for (int i = 0; i < k; ++i) inst.attributes.push_back("x" + std::to_string(i));
    inst.family = gen.family;
    inst.theta = gen.theta;
    inst.query = gen.query;
    if (round % 2) inst.threshold = Rational(round, 97);
    const std::string text = io::emit_instance(inst);
    const auto back = io::parse_instance(text);
    CHECK(back == inst);
    CHECK(io::emit_instance(back) == text);
  }
}

TEST_CASE("itemset names") {
  const std::vector<std::string> attrs{"a", "b", "c"};
  CHECK(io::parse_itemset(attrs, "c,a") == Itemset{0, 2});
  CHECK(io::parse_itemset(attrs, "") == Itemset{});
  CHECK_THROWS_AS(io::parse_itemset(attrs, "a,d"), MalformedInput);
  CHECK_THROWS_AS(io::parse_itemset(attrs, "a,a"), MalformedInput);
  CHECK(io::itemset_names(attrs, Itemset{0, 2}) == "a,c");
  CHECK(io::itemset_names(attrs, Itemset{}) == "");
}

TEST_CASE("distribution files") {
  const std::vector<std::string> attrs{"a", "b"};
  const auto p = ExactDistribution::sparse(2, {{1, Rational(1, 4)}, {2, Rational(3, 4)}});
  const std::string text = io::emit_distribution(p, attrs);
  const auto back = io::parse_distribution(text);
  CHECK(back.attributes == attrs);
  REQUIRE(std::holds_alternative<ExactDistribution>(back.distribution));
  const auto& q = std::get<ExactDistribution>(back.distribution);
  CHECK(q.mass(1) == Rational(1, 4));
  CHECK(q.mass(2) == Rational(3, 4));
  CHECK(text.find("\"state\": \"10\"") != std::string::npos);

  const auto f = FloatDistribution::uniform(2);
  const auto fb = io::parse_distribution(io::emit_distribution(f, attrs));
  REQUIRE(std::holds_alternative<FloatDistribution>(fb.distribution));
  CHECK(std::get<FloatDistribution>(fb.distribution).mass(3) == 0.25);

  const char* bad[] = {
      R"({"attributes": ["a"], "mode": "exact", "entries": [{"state": "1", "mass": "1/2"}]})",
      R"({"attributes": ["a"], "mode": "exact", "entries": [{"state": "10", "mass": "1"}]})",
      R"({"attributes": ["a"], "mode": "exact", "entries": [{"state": "1", "mass": "3/2"},
                                                           {"state": "0", "mass": "-1/2"}]})",
      R"({"attributes": ["a"], "mode": "float", "entries": [{"state": "1", "mass": 0.9}]})",
      R"({"attributes": ["a"], "mode": "other", "entries": []})",
  };
  for (const char* t : bad) {
    CAPTURE(t);
    CHECK_THROWS_AS(io::parse_distribution(t), MalformedInput);
  }
}
