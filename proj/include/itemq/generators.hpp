#pragma once

#include <random>

#include "itemq/model.hpp"
#include "itemq/reduction.hpp"

namespace itemq::oracle {

/// Formula with L in [1, max_variables], M in [1, max_clauses] and clauses of
/// one to three distinct variables with random signs.
CnfFormula random_cnf(std::mt19937_64& rng, int max_variables, int max_clauses);

struct RandomInstance {
  ItemsetFamily family;
  FrequencyAssignment theta;
  Itemset query;
  /// The distribution θ was read from, so θ is consistent by construction.
  ExactDistribution source;
};

/// Antimonotonic family over K attributes (closure of a few random seeds),
/// frequencies of a random sparse rational distribution, and a random query
/// of size 1..3.
RandomInstance random_consistent_instance(std::mt19937_64& rng, int attribute_count);

/// Family {∅, {0}, ..., {K-1}} with random rational singleton frequencies;
/// the query is the full attribute set.
RandomInstance random_singleton_instance(std::mt19937_64& rng, int attribute_count);

}  // namespace itemq::oracle
