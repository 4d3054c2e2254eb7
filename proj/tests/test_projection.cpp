#include <random>

#include "doctest.h"

#include "itemq/generators.hpp"
#include "itemq/projection.hpp"

using namespace itemq;

TEST_CASE("two-term difference on a pair") {
  const ItemsetFamily f({Itemset{}, Itemset{0}, Itemset{1}, Itemset{0, 1}}, 2);
  const FrequencyAssignment theta({Rational(1), Rational(3, 5), Rational(1, 2), Rational(3, 10)});
  const auto p = project(f, theta, Itemset{0, 1}, BinaryVector::parse("10"));
  CHECK(p.value == Rational(3, 10));
  CHECK(p.in_unit_interval);
  // Full inclusion-exclusion for the all-zero cell: 1 − 3/5 − 1/2 + 3/10.
  CHECK(project(f, theta, Itemset{0, 1}, BinaryVector::parse("00")).value == Rational(1, 5));
}

TEST_CASE("two-clause cell v1 v2 c1 = 110 is empty") {
  // Attributes v1 v2 v3 c1 c2 = 0..4; clauses (v1 ∨ v2), (¬v2 ∨ v3).
  const ItemsetFamily f({Itemset{}, Itemset{0}, Itemset{1}, Itemset{2}, Itemset{0, 1}, Itemset{1, 2},
                         Itemset{3}, Itemset{0, 3}, Itemset{1, 3}, Itemset{0, 1, 3}, Itemset{4},
                         Itemset{1, 4}, Itemset{2, 4}, Itemset{1, 2, 4}},
                        5);
  // Oracle: the construction distribution over the 8 assignments, with each
  // cell probability read off by enumeration.
  std::vector<ExactDistribution::Entry> entries;
  for (State t = 0; t < 8; ++t) {
    const bool v1 = t & 1, v2 = t & 2, v3 = t & 4;
    State s = t;
    if (v1 || v2) s |= 8;
    if (!v2 || v3) s |= 16;
    entries.emplace_back(s, Rational(1, 8));
  }
  const auto p = ExactDistribution::sparse(5, entries);
  std::vector<Rational> values;
  for (Itemset m : f) values.push_back(frequency(p, m));
  const FrequencyAssignment theta(values);

  const Itemset c{0, 1, 3};
  const auto t = BinaryVector::parse("110");
  const Rational expected = event_probability(p, c, t);
  CHECK(expected == 0);
  CHECK(project(f, theta, c, t).value == 0);

  // Every cell of every member agrees with the enumeration.
  for (Itemset member : f)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << member.size()); ++bits) {
      const BinaryVector pattern(bits, member.size());
      CHECK(project(f, theta, member, pattern).value == event_probability(p, member, pattern));
    }
}

TEST_CASE("all-ones pattern returns the member frequency") {
  std::mt19937_64 rng(3);
  const auto inst = oracle::random_consistent_instance(rng, 5);
  for (std::size_t i = 0; i < inst.family.size(); ++i)
    CHECK(project(inst.family, inst.theta, inst.family[i], BinaryVector::ones(inst.family[i].size())).value ==
          inst.theta[i]);
}

TEST_CASE("errors") {
  const ItemsetFamily f({Itemset{}, Itemset{0}, Itemset{1}}, 2);
  const FrequencyAssignment theta({Rational(1), Rational(3, 5), Rational(1, 2)});
  CHECK_THROWS_AS(project(f, theta, Itemset{0, 1}, BinaryVector::parse("11")), UnknownItemset);
  CHECK_THROWS_AS(project(f, theta, Itemset{0}, BinaryVector::parse("11")), MalformedInput);

  const ItemsetFamily gappy({Itemset{}, Itemset{0}, Itemset{0, 1}}, 2);
  CHECK_THROWS_AS(project(gappy, theta, Itemset{0}, BinaryVector::parse("1")), PreconditionViolation);
}

TEST_CASE("inconsistent frequencies surface as out-of-range values") {
  const ItemsetFamily f({Itemset{}, Itemset{0}, Itemset{1}, Itemset{0, 1}}, 2);
  const FrequencyAssignment theta({Rational(1), Rational(1, 2), Rational(1, 2), Rational(4, 5)});
  const auto p = project(f, theta, Itemset{0, 1}, BinaryVector::parse("10"));
  CHECK(p.value == Rational(-3, 10));
  CHECK_FALSE(p.in_unit_interval);
}

TEST_CASE("property: cells agree with any satisfying distribution and sum to one") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 40; ++round) {
    const int k = std::uniform_int_distribution<int>(1, 7)(rng);
    const auto inst = oracle::random_consistent_instance(rng, k);
    for (Itemset member : inst.family) {
      Rational total = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << member.size()); ++bits) {
        const BinaryVector t(bits, member.size());
        const auto p = project(inst.family, inst.theta, member, t);
        CHECK(p.in_unit_interval);
        CHECK(p.value == event_probability(inst.source, member, t));
        total += p.value;
      }
      CHECK(total == 1);
    }
  }
}
