#pragma once

#include <cstdint>
#include <optional>

#include "itemq/model.hpp"
#include "itemq/reduction.hpp"

namespace itemq::oracle {

inline constexpr int kSatCountLimit = 24;
inline constexpr int kFloatLpAttributeLimit = 12;

/// Number of satisfying assignments, by enumerating all 2^L of them.
/// Throws ResourceLimit when L exceeds kSatCountLimit.
std::uint64_t count_satisfying(const CnfFormula& formula);

struct FloatBounds {
  double lo = 0.0;
  double hi = 0.0;
};

/// Range of p(B = 1) from a dense floating-point tableau simplex with
/// largest-coefficient pricing. Shares no code with the exact engine.
/// Returns nullopt when phase 1 finds the frequencies infeasible.
/// Throws ResourceLimit when K exceeds kFloatLpAttributeLimit.
std::optional<FloatBounds> float_lp_bounds(const ItemsetFamily& family,
                                           const FrequencyAssignment& theta, Itemset query);

}  // namespace itemq::oracle
