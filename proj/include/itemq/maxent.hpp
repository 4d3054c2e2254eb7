#pragma once

#include <cmath>
#include <cstddef>

#include "itemq/model.hpp"

namespace itemq {

struct MaxEntOptions {
  /// Exit when max_i |p(F_i = 1) − θ_i| ≤ tolerance.
  double tolerance = 1e-9;
  /// Budget in full sweeps over the constraints.
  std::size_t max_iterations = 100000;
  int attribute_limit = kDenseAttributeLimit;
  /// Before fitting, zero every state in a cell C = t whose probability is
  /// forced to 0 by the frequencies (members with θ = 0 included). With this
  /// off only θ_i = 0 events are zeroed.
  bool zero_forced_cells = true;
};

struct MaxEntResult {
  FloatDistribution distribution;
  double query_frequency = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// Shannon entropy in nats, with 0·ln 0 = 0.
template <typename Scalar>
double entropy(const JointDistribution<Scalar>& p) {
  double h = 0.0;
  p.for_each([&](State, const Scalar& m) {
    double x;
    if constexpr (mode_of<Scalar> == DistributionMode::exact) x = to_double(m);
    else x = static_cast<double>(m);
    if (x > 0.0) h -= x * std::log(x);
  });
  return h;
}

/// Fits the entropy-maximizing distribution satisfying θ by iterative
/// proportional fitting from the uniform distribution, then reads off the
/// query frequency. Constraints are swept in canonical itemset order; each
/// update rescales the event F_i by θ_i/m and its complement by (1−θ_i)/(1−m).
///
/// Non-convergence is reported through MaxEntResult::converged, not thrown.
/// Throws ResourceLimit when K exceeds options.attribute_limit.
MaxEntResult fit_maxent(const ItemsetFamily& family, const FrequencyAssignment& theta,
                        Itemset query, const MaxEntOptions& options = {});

enum class Decision { yes, no, indeterminate };

const char* to_string(Decision decision);

/// yes iff the fitted frequency exceeds threshold + tolerance, no iff it is
/// below threshold − tolerance or the query event carries no mass at all
/// (then the frequency is exactly 0 and cannot exceed a threshold ≥ 0).
/// Anything else, including a fit that did not converge, is indeterminate.
Decision decide_entr_query(const ItemsetFamily& family, const FrequencyAssignment& theta,
                           Itemset query, const Rational& threshold,
                           const MaxEntOptions& options = {});

Decision decide_entr_query(const MaxEntResult& fit, const Rational& threshold, double tolerance);

}  // namespace itemq
