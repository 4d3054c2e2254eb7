#include <cmath>
#include <random>

#include "doctest.h"

#include "itemq/generators.hpp"
#include "itemq/oracle.hpp"

using namespace itemq;

TEST_CASE("count_satisfying") {
  CHECK(oracle::count_satisfying(parse_dimacs("p cnf 3 2\n1 2 0\n-2 3 0\n")) == 4);
  CHECK(oracle::count_satisfying(parse_dimacs("p cnf 3 1\n1 2 3 0\n")) == 7);
  CHECK(oracle::count_satisfying(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")) == 0);
  // An unused variable doubles the count.
  CHECK(oracle::count_satisfying(parse_dimacs("p cnf 4 1\n1 0\n")) == 8);
  CHECK_THROWS_AS(oracle::count_satisfying(CnfFormula(25, {{{0, true}}})), ResourceLimit);
}

TEST_CASE("float_lp_bounds") {
  const ItemsetFamily f({Itemset{}, Itemset{0}, Itemset{1}}, 2);
  const FrequencyAssignment theta({Rational(1), Rational(3, 5), Rational(1, 2)});
  const auto b = oracle::float_lp_bounds(f, theta, Itemset{0, 1});
  REQUIRE(b);
  CHECK(std::abs(b->lo - 0.1) <= 1e-9);
  CHECK(std::abs(b->hi - 0.5) <= 1e-9);

  const ItemsetFamily pair({Itemset{}, Itemset{0}, Itemset{1}, Itemset{0, 1}}, 2);
  CHECK_FALSE(oracle::float_lp_bounds(
      pair, FrequencyAssignment({Rational(1), Rational(1, 2), Rational(1, 2), Rational(4, 5)}), Itemset{0}));

  std::vector<Itemset> singles{Itemset{}};
  std::vector<Rational> halves{Rational(1)};
  for (int i = 0; i < 13; ++i) {
    singles.push_back(Itemset{i});
    halves.emplace_back(1, 2);
  }
  CHECK_THROWS_AS(oracle::float_lp_bounds(ItemsetFamily(singles, 13), FrequencyAssignment(halves), Itemset{0, 1}),
                  ResourceLimit);
}

TEST_CASE("property: float bounds bracket the source distribution") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    const int k = std::uniform_int_distribution<int>(2, 8)(rng);
    const auto inst = oracle::random_consistent_instance(rng, k);
    const auto b = oracle::float_lp_bounds(inst.family, inst.theta, inst.query);
    REQUIRE(b);
    const double source = to_double(frequency(inst.source, inst.query));
    CHECK(b->lo <= source + 1e-9);
    CHECK(source <= b->hi + 1e-9);
  }
}

TEST_CASE("generators") {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 50; ++round) {
    const auto f = oracle::random_cnf(rng, 6, 8);
    CHECK(f.variable_count() >= 1);
    CHECK(f.variable_count() <= 6);
    CHECK(f.clause_count() >= 1);
    CHECK(f.clause_count() <= 8);
    const auto inst = oracle::random_consistent_instance(rng, 6);
    CHECK(is_antimonotonic(inst.family));
    CHECK(satisfies(inst.source, inst.family, inst.theta));
  }
}
