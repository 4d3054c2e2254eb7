#pragma once

#include "itemq/model.hpp"

namespace itemq {

struct Projection {
  Rational value;
  /// False only when θ is inconsistent; the raw value is still reported.
  bool in_unit_interval = true;
};

/// p(C = t) for a member C of an antimonotonic family, by inclusion-exclusion
/// over the frequencies of C's subsets. The value is the same for every
/// distribution satisfying θ.
///
/// With U the items of C set to 1 by t and W the rest:
///   p(C = t) = θ_U − Σ_{∅≠H⊆W} (−1)^{|H|+1} θ_{U∪H}
///
/// Throws UnknownItemset if C is not a member, PreconditionViolation if the
/// family is not antimonotonic, MalformedInput if |t| ≠ |C|.
Projection project(const ItemsetFamily& family, const FrequencyAssignment& theta, Itemset member,
                   const BinaryVector& t);

}  // namespace itemq
