#pragma once

#include <optional>
#include <vector>

#include "itemq/model.hpp"

namespace itemq {

inline constexpr int kDefaultLpAttributeLimit = 16;

struct LpOptions {
  /// Largest K accepted. Pricing sweeps all 2^K states once per pivot.
  int attribute_limit = kDefaultLpAttributeLimit;
  /// Price in arbitrary precision even when 64-bit integers would do.
  bool wide_pricing = false;
};

/// The linear program over the distribution polytope of {0,1}^K. There is one
/// column x_ω per state (never materialized) and one equality row per
/// nonempty family member,
///   Σ_{ω ⊇ F_i} x_ω = θ_i,
/// plus the normalization row Σ_ω x_ω = 1, stored last with the empty itemset
/// as its row set. A member ∅ is validated against θ_∅ = 1 and folded into the
/// normalization row.
class FrequencyProgram {
 public:
  FrequencyProgram(const ItemsetFamily& family, const FrequencyAssignment& theta,
                   const LpOptions& options = {});

  int attribute_count() const { return attribute_count_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Itemset>& rows() const { return rows_; }
  bool wide_pricing() const { return wide_pricing_; }
  const std::vector<Rational>& rhs() const { return rhs_; }

 private:
  int attribute_count_ = 0;
  bool wide_pricing_ = false;
  std::vector<Itemset> rows_;
  std::vector<Rational> rhs_;
};

struct ConsistencyResult {
  bool consistent = false;
  /// Vertex of the polytope: at most N + 1 states carry mass.
  std::optional<ExactDistribution> witness;
};

struct QueryOptimum {
  Rational value;
  ExactDistribution witness;
};

/// Tight range of p(B = 1) over all distributions satisfying θ.
struct QueryInterval {
  Rational lo;
  Rational hi;
  ExactDistribution lo_witness;
  ExactDistribution hi_witness;
};

/// Decides whether any distribution satisfies θ.
/// Throws PreconditionViolation for a non-antimonotonic family and
/// ResourceLimit when K exceeds options.attribute_limit.
ConsistencyResult check_consistent(const ItemsetFamily& family, const FrequencyAssignment& theta,
                                   const LpOptions& options = {});

/// Throws InconsistentFrequencies when θ admits no distribution.
QueryOptimum max_query_frequency(const ItemsetFamily& family, const FrequencyAssignment& theta,
                                 Itemset query, const LpOptions& options = {});
QueryOptimum min_query_frequency(const ItemsetFamily& family, const FrequencyAssignment& theta,
                                 Itemset query, const LpOptions& options = {});
QueryInterval query_bounds(const ItemsetFamily& family, const FrequencyAssignment& theta,
                           Itemset query, const LpOptions& options = {});

/// True iff some satisfying distribution gives the query frequency > threshold.
bool decide_max_query(const ItemsetFamily& family, const FrequencyAssignment& theta, Itemset query,
                      const Rational& threshold, const LpOptions& options = {});

enum class WitnessVerdict { accepted, not_a_distribution, violates_theta, below_threshold };

/// Certificate check: p is a distribution on the family's sample space, it
/// satisfies θ exactly, and p(B = 1) > threshold.
WitnessVerdict verify_witness(const ExactDistribution& p, const ItemsetFamily& family,
                              const FrequencyAssignment& theta, Itemset query,
                              const Rational& threshold);

const char* to_string(WitnessVerdict verdict);

}  // namespace itemq
