#include "itemq/projection.hpp"

namespace itemq {

Projection project(const ItemsetFamily& family, const FrequencyAssignment& theta, Itemset member,
                   const BinaryVector& t) {
  validate_alignment(family, theta);
  if (!family.contains(member))
    throw UnknownItemset("itemset is not a family member; its frequency is not determined");
  require_antimonotonic(family);
  if (t.length() != member.size())
    throw MalformedInput("pattern length " + std::to_string(t.length()) +
                         " does not match member size " + std::to_string(member.size()));

  const Itemset ones(spread_pattern(member, t));
  const std::uint64_t zeros = (member - ones).mask();

  // Σ_{H⊆W} (−1)^{|H|} θ_{U∪H}; the H = ∅ term is θ_U.
  Rational value = 0;
  for (std::uint64_t h = zeros;; h = (h - 1) & zeros) {
    const auto idx = family.index_of(Itemset(ones.mask() | h));
    const Rational& f = theta[*idx];
    if (std::popcount(h) % 2 == 0) value += f;
    else value -= f;
    if (h == 0) break;
  }
  return {value, value >= 0 && value <= 1};
}

}  // namespace itemq
