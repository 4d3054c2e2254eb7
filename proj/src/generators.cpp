#include "itemq/generators.hpp"

namespace itemq::oracle {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Itemset random_itemset(std::mt19937_64& rng, int attribute_count, int min_size, int max_size) {
  const int size = uniform(rng, min_size, std::min(max_size, attribute_count));
  std::vector<int> pool(static_cast<std::size_t>(attribute_count));
  for (int i = 0; i < attribute_count; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(size));
  return Itemset::from_indices(pool);
}

FrequencyAssignment frequencies_of(const ExactDistribution& p, const ItemsetFamily& family) {
  std::vector<Rational> theta;
  for (Itemset member : family) theta.push_back(frequency(p, member));
  return FrequencyAssignment(std::move(theta));
}

}  // namespace

CnfFormula random_cnf(std::mt19937_64& rng, int max_variables, int max_clauses) {
  const int l = uniform(rng, 1, max_variables);
  const int m = uniform(rng, 1, max_clauses);
  std::vector<Clause> clauses;
  for (int i = 0; i < m; ++i) {
    Clause clause;
    for (int v : random_itemset(rng, l, 1, 3).indices()) clause.push_back({v, uniform(rng, 0, 1) == 1});
    std::shuffle(clause.begin(), clause.end(), rng);
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(l, std::move(clauses));
}

RandomInstance random_consistent_instance(std::mt19937_64& rng, int attribute_count) {
  const int k = attribute_count;
  std::vector<Itemset> seeds;
  const int seed_count = uniform(rng, 1, 4);
  for (int i = 0; i < seed_count; ++i) seeds.push_back(random_itemset(rng, k, 1, 3));
  ItemsetFamily family = downward_closure(seeds, k);

  // Sparse source distribution with small integer weights.
  const int support = uniform(rng, 1, 8);
  std::vector<std::pair<State, int>> weights;
  int total = 0;
  for (int i = 0; i < support; ++i) {
    const State s = std::uniform_int_distribution<State>(0, (State{1} << k) - 1)(rng);
    bool seen = false;
    for (const auto& w : weights) seen = seen || w.first == s;
    if (seen) continue;
    const int w = uniform(rng, 1, 9);
    weights.emplace_back(s, w);
    total += w;
  }
  std::vector<ExactDistribution::Entry> entries;
  for (const auto& [s, w] : weights) entries.emplace_back(s, Rational(w, total));
  auto source = ExactDistribution::sparse(k, std::move(entries));

  auto theta = frequencies_of(source, family);
  return {std::move(family), std::move(theta), random_itemset(rng, k, 1, 3), std::move(source)};
}

RandomInstance random_singleton_instance(std::mt19937_64& rng, int attribute_count) {
  const int k = attribute_count;
  std::vector<Itemset> members{Itemset{}};
  std::vector<Rational> theta{Rational(1)};
  for (int i = 0; i < k; ++i) {
    members.push_back(Itemset{i});
    const int den = uniform(rng, 1, 12);
    theta.emplace_back(uniform(rng, 0, den), den);
  }
  ItemsetFamily family(std::move(members), k);
  // Independent attributes realize any singleton frequencies.
  std::vector<ExactDistribution::Entry> entries;
  for (State s = 0; s < (State{1} << k); ++s) {
    Rational m = 1;
    for (int i = 0; i < k; ++i)
      m *= ((s >> i) & 1U) ? theta[static_cast<std::size_t>(i) + 1] : Rational(1 - theta[static_cast<std::size_t>(i) + 1]);
    entries.emplace_back(s, m);
  }
  auto source = ExactDistribution::sparse(k, std::move(entries));
  const Itemset query((State{1} << k) - 1);
  return {std::move(family), FrequencyAssignment(std::move(theta)), query, std::move(source)};
}

}  // namespace itemq::oracle
