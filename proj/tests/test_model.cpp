#include <random>

#include "doctest.h"

#include "itemq/generators.hpp"
#include "itemq/model.hpp"

using namespace itemq;

namespace {

// Reduction family of (v1 ∨ v2) ∧ (¬v2 ∨ v3) over v1 v2 v3 c1 c2 = attributes 0..4.
ItemsetFamily example_family() {
  return ItemsetFamily({Itemset{}, Itemset{0}, Itemset{1}, Itemset{2}, Itemset{0, 1}, Itemset{1, 2},
                        Itemset{3}, Itemset{0, 3}, Itemset{1, 3}, Itemset{0, 1, 3}, Itemset{4},
                        Itemset{1, 4}, Itemset{2, 4}, Itemset{1, 2, 4}},
                       5);
}

}  // namespace

TEST_CASE("itemset basics") {
  const Itemset ab{0, 1};
  CHECK(ab.size() == 2);
  CHECK(ab.contains(1));
  CHECK_FALSE(ab.contains(2));
  CHECK(Itemset{0}.is_subset_of(ab));
  CHECK(Itemset{}.is_subset_of(ab));
  CHECK_FALSE(Itemset{2}.is_subset_of(ab));
  CHECK(ab.indices() == std::vector<int>{0, 1});
  CHECK(Itemset{5}.extent() == 6);
  CHECK_THROWS_AS(Itemset({1, 1}), MalformedInput);
  CHECK_THROWS_AS(Itemset({64}), MalformedInput);
}

TEST_CASE("canonical order is size first, then lexicographic") {
  CHECK(canonical_less(Itemset{}, Itemset{0}));
  CHECK(canonical_less(Itemset{4}, Itemset{0, 1}));
  CHECK(canonical_less(Itemset{0, 3}, Itemset{1, 2}));
  CHECK(canonical_less(Itemset{1, 2}, Itemset{1, 3}));
  CHECK_FALSE(canonical_less(Itemset{1, 3}, Itemset{1, 3}));
}

TEST_CASE("binary vectors") {
  const auto t = BinaryVector::parse("110");
  CHECK(t.length() == 3);
  CHECK(t[0]);
  CHECK(t[1]);
  CHECK_FALSE(t[2]);
  CHECK(t.str() == "110");
  CHECK(BinaryVector::ones(3).str() == "111");
  CHECK(BinaryVector::parse("").length() == 0);
  CHECK_THROWS_AS(BinaryVector::parse("102"), MalformedInput);
}

TEST_CASE("family construction validates members") {
  CHECK_THROWS_AS(ItemsetFamily({Itemset{0}, Itemset{0}}, 2), MalformedInput);
  CHECK_THROWS_AS(ItemsetFamily({Itemset{3}}, 2), MalformedInput);
  const ItemsetFamily f({Itemset{}, Itemset{1}}, 2);
  CHECK(f.index_of(Itemset{1}) == 1U);
  CHECK_FALSE(f.contains(Itemset{0}));
}

TEST_CASE("frequency assignment range and alignment") {
  CHECK_THROWS_AS(FrequencyAssignment({Rational(3, 2)}), MalformedInput);
  CHECK_THROWS_AS(FrequencyAssignment({Rational(-1, 2)}), MalformedInput);
  const ItemsetFamily f({Itemset{}, Itemset{0}}, 1);
  CHECK_THROWS_AS(validate_alignment(f, FrequencyAssignment({Rational(1)})), MalformedInput);
  CHECK_THROWS_AS(validate_alignment(f, FrequencyAssignment({Rational(1, 2), Rational(1, 2)})),
                  MalformedInput);
  CHECK_NOTHROW(validate_alignment(f, FrequencyAssignment({Rational(1), Rational(1, 2)})));
}

TEST_CASE("downward_closure") {
  SUBCASE("pair") {
    const std::vector<Itemset> seeds{Itemset{0, 1}};
    const auto f = downward_closure(seeds, 2);
    CHECK(f.members() == std::vector<Itemset>{Itemset{}, Itemset{0}, Itemset{1}, Itemset{0, 1}});
  }
  SUBCASE("empty seed") {
    const std::vector<Itemset> seeds{Itemset{}};
    const auto f = downward_closure(seeds, 3);
    CHECK(f.size() == 1);
    CHECK(f[0].empty());
  }
  SUBCASE("one clause seed v1 v2 v3 c1 gives 16 members") {
    const std::vector<Itemset> seeds{Itemset{0, 1, 2, 3}};
    CHECK(downward_closure(seeds, 4).size() == 16);
  }
  SUBCASE("out of range") {
    const std::vector<Itemset> seeds{Itemset{0, 5}};
    CHECK_THROWS_AS(downward_closure(seeds, 3), MalformedInput);
  }
}

TEST_CASE("is_antimonotonic") {
  CHECK(is_antimonotonic(ItemsetFamily({Itemset{}, Itemset{0}, Itemset{1}, Itemset{0, 1}}, 2)));
  CHECK_FALSE(is_antimonotonic(ItemsetFamily({Itemset{0, 1}}, 2)));
  CHECK(is_antimonotonic(example_family()));
  CHECK(missing_subsets(ItemsetFamily({Itemset{0, 1}}, 2)) == std::vector<Itemset>{Itemset{0}, Itemset{1}});
  CHECK_THROWS_AS(require_antimonotonic(ItemsetFamily({Itemset{0, 1}}, 2)), PreconditionViolation);
}

TEST_CASE("event_probability") {
  const auto uniform3 = ExactDistribution::uniform(3);
  CHECK(event_probability(uniform3, Itemset{}, BinaryVector()) == 1);
  CHECK(event_probability(uniform3, Itemset{0, 1}, BinaryVector::parse("11")) == Rational(1, 4));
  CHECK_THROWS_AS(event_probability(uniform3, Itemset{0, 1}, BinaryVector::parse("1")), MalformedInput);
  CHECK_THROWS_AS(event_probability(uniform3, Itemset{4}, BinaryVector::parse("1")), MalformedInput);

  // Construction for the single clause (v1 ∨ v2 ∨ v3): uniform variables and
  // c1 equal to the clause value; attributes v1 v2 v3 c1 = 0..3.
  std::vector<ExactDistribution::Entry> entries;
  for (State t = 0; t < 8; ++t) entries.emplace_back(t | (t != 0 ? State{8} : 0), Rational(1, 8));
  const auto p = ExactDistribution::sparse(4, entries);
  CHECK(frequency(p, Itemset{0, 1, 2, 3}) == Rational(1, 8));
}

TEST_CASE("satisfies") {
  const auto uniform2 = ExactDistribution::uniform(2);
  const ItemsetFamily f({Itemset{}, Itemset{0}, Itemset{1}}, 2);
  CHECK(satisfies(uniform2, f, FrequencyAssignment({Rational(1), Rational(1, 2), Rational(1, 2)})));
  CHECK_FALSE(satisfies(uniform2, f, FrequencyAssignment({Rational(1), Rational(1, 2), Rational(1, 4)})));

  const auto floating = FloatDistribution::uniform(2);
  CHECK(satisfies(floating, f, FrequencyAssignment({Rational(1), Rational(1, 2), Rational(1, 2)}), 1e-12));
  CHECK_FALSE(satisfies(floating, f, FrequencyAssignment({Rational(1), Rational(1, 2), Rational(1, 4)}), 1e-3));
}

TEST_CASE("distribution storage") {
  CHECK_THROWS_AS(ExactDistribution::sparse(2, {{1, Rational(1, 2)}, {1, Rational(1, 2)}}), MalformedInput);
  CHECK_THROWS_AS(ExactDistribution::sparse(2, {{4, Rational(1)}}), MalformedInput);
  CHECK_THROWS_AS(FloatDistribution::uniform(kDenseAttributeLimit + 1), ResourceLimit);

  const auto p = ExactDistribution::sparse(3, {{5, Rational(1, 3)}, {0, Rational(2, 3)}, {2, Rational(0)}});
  CHECK(p.support_size() == 2);
  CHECK(p.mass(5) == Rational(1, 3));
  CHECK(p.mass(2) == 0);
  CHECK(p.entries().front().first == 0);
  CHECK(is_distribution(p));
  CHECK_FALSE(is_distribution(ExactDistribution::sparse(1, {{0, Rational(1, 2)}})));
  CHECK_FALSE(is_distribution(ExactDistribution::sparse(1, {{0, Rational(3, 2)}, {1, Rational(-1, 2)}})));
  CHECK(ExactDistribution::mode == DistributionMode::exact);
  CHECK(FloatDistribution::mode == DistributionMode::floating);
}

TEST_CASE("property: frequencies are monotone and patterns partition the mass") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 60; ++round) {
    const int k = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto inst = oracle::random_consistent_instance(rng, k);
    const auto& p = inst.source;
    REQUIRE(is_distribution(p));
    CHECK(is_antimonotonic(inst.family));

    const Itemset big(std::uniform_int_distribution<State>(0, (State{1} << k) - 1)(rng));
    const Itemset small(big.mask() & std::uniform_int_distribution<State>(0, (State{1} << k) - 1)(rng));
    CHECK(frequency(p, big) <= frequency(p, small));

    Rational total = 0;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << big.size()); ++t)
      total += event_probability(p, big, BinaryVector(t, big.size()));
    CHECK(total == 1);
  }
}
