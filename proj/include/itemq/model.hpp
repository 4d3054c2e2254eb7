#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "itemq/errors.hpp"
#include "itemq/rational.hpp"

namespace itemq {

/// A point of the sample space {0,1}^K; bit i is the value of attribute i.
using State = std::uint64_t;

inline constexpr int kMaxAttributes = 64;
/// Largest K for which a dense mass vector over {0,1}^K may be allocated.
inline constexpr int kDenseAttributeLimit = 24;

/// A set of attribute indices stored as a bitmask.
class Itemset {
 public:
  constexpr Itemset() = default;
  constexpr explicit Itemset(std::uint64_t mask) : mask_(mask) {}
  Itemset(std::initializer_list<int> attributes);
  static Itemset from_indices(std::span<const int> attributes);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int attribute) const { return (mask_ >> attribute) & 1U; }
  constexpr bool is_subset_of(Itemset other) const { return (mask_ & ~other.mask_) == 0; }
  /// True iff every item of this set is 1 in the state.
  constexpr bool covered_by(State state) const { return (mask_ & ~state) == 0; }
  /// One past the largest attribute index (0 for the empty set).
  constexpr int extent() const { return 64 - std::countl_zero(mask_); }

  /// Ascending attribute indices.
  std::vector<int> indices() const;

  constexpr Itemset operator|(Itemset o) const { return Itemset(mask_ | o.mask_); }
  constexpr Itemset operator&(Itemset o) const { return Itemset(mask_ & o.mask_); }
  constexpr Itemset operator-(Itemset o) const { return Itemset(mask_ & ~o.mask_); }
  constexpr bool operator==(const Itemset&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Canonical order: by size, then lexicographically by ascending indices.
bool canonical_less(Itemset a, Itemset b);

/// A fixed-length 0/1 vector; bit i is entry t_i.
class BinaryVector {
 public:
  BinaryVector() = default;
  BinaryVector(std::uint64_t bits, int length);
  /// Parses a string of '0'/'1' characters, first character = t_1.
  static BinaryVector parse(std::string_view text);
  static BinaryVector ones(int length);

  int length() const { return length_; }
  bool operator[](int i) const { return (bits_ >> i) & 1U; }
  std::uint64_t bits() const { return bits_; }
  std::string str() const;
  bool operator==(const BinaryVector&) const = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// Ordered list of distinct itemsets over K attributes. Antimonotonicity is
/// not a type invariant; see is_antimonotonic().
class ItemsetFamily {
 public:
  ItemsetFamily() = default;
  ItemsetFamily(std::vector<Itemset> members, int attribute_count);

  int attribute_count() const { return attribute_count_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Itemset>& members() const { return members_; }
  const Itemset& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::optional<std::size_t> index_of(Itemset itemset) const;
  bool contains(Itemset itemset) const { return index_of(itemset).has_value(); }

  bool operator==(const ItemsetFamily& o) const {
    return attribute_count_ == o.attribute_count_ && members_ == o.members_;
  }

 private:
  std::vector<Itemset> members_;
  int attribute_count_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// θ: one exact rational in [0,1] per family member.
class FrequencyAssignment {
 public:
  FrequencyAssignment() = default;
  explicit FrequencyAssignment(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  bool operator==(const FrequencyAssignment&) const = default;

 private:
  std::vector<Rational> values_;
};

/// Checks that θ is aligned with the family and that θ_∅ = 1 when ∅ is a
/// member. Throws MalformedInput otherwise.
void validate_alignment(const ItemsetFamily& family, const FrequencyAssignment& theta);

/// Closes the seeds under subsets; result is in canonical order.
ItemsetFamily downward_closure(std::span<const Itemset> seeds, int attribute_count);

bool is_antimonotonic(const ItemsetFamily& family);

/// Immediate subsets of members that are absent from the family, canonical order.
std::vector<Itemset> missing_subsets(const ItemsetFamily& family);

/// Throws PreconditionViolation naming a missing subset.
void require_antimonotonic(const ItemsetFamily& family);

void require_attribute_limit(int attribute_count, int limit);

// ---------------------------------------------------------------------------
// Distributions

enum class DistributionMode { exact, floating };

template <typename Scalar>
inline constexpr DistributionMode mode_of =
    std::is_same_v<Scalar, Rational> ? DistributionMode::exact : DistributionMode::floating;

/// Probability mass over {0,1}^K, held either densely (one entry per state)
/// or sparsely (sorted state/mass pairs). The scalar type is the mode tag:
/// JointDistribution<Rational> is exact, JointDistribution<double> floating,
/// and operations never mix the two.
template <typename Scalar>
class JointDistribution {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Entry = std::pair<State, Scalar>;
  static constexpr DistributionMode mode = mode_of<Scalar>;

  JointDistribution() = default;

  /// Entries must name distinct states below 2^K; zero masses are dropped.
  static JointDistribution sparse(int attribute_count, std::vector<Entry> entries) {
    if (attribute_count < 0 || attribute_count > kMaxAttributes)
      throw MalformedInput("attribute count out of range");
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (attribute_count < 64 && (entries[i].first >> attribute_count) != 0)
        throw MalformedInput("state outside the sample space");
      if (i > 0 && entries[i].first == entries[i - 1].first)
        throw MalformedInput("duplicate state in distribution");
    }
    std::erase_if(entries, [](const Entry& e) { return e.second == Scalar(0); });
    JointDistribution d;
    d.attribute_count_ = attribute_count;
    d.storage_ = std::move(entries);
    return d;
  }

  /// mass.size() must be 2^K with K ≤ kDenseAttributeLimit.
  static JointDistribution dense(int attribute_count, Vector mass) {
    require_attribute_limit(attribute_count, kDenseAttributeLimit);
    if (mass.size() != (Eigen::Index{1} << attribute_count))
      throw MalformedInput("dense mass vector has wrong length");
    JointDistribution d;
    d.attribute_count_ = attribute_count;
    d.storage_ = std::move(mass);
    return d;
  }

  static JointDistribution uniform(int attribute_count) {
    require_attribute_limit(attribute_count, kDenseAttributeLimit);
    const Eigen::Index n = Eigen::Index{1} << attribute_count;
    return dense(attribute_count, Vector::Constant(n, Scalar(1) / Scalar(n)));
  }

  static JointDistribution point(int attribute_count, State state) {
    return sparse(attribute_count, {{state, Scalar(1)}});
  }

  int attribute_count() const { return attribute_count_; }
  bool is_dense() const { return std::holds_alternative<Vector>(storage_); }

  /// Visits every state with nonzero mass in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (const auto* v = std::get_if<Vector>(&storage_)) {
      for (Eigen::Index s = 0; s < v->size(); ++s)
        if ((*v)[s] != Scalar(0)) fn(static_cast<State>(s), (*v)[s]);
    } else {
      for (const auto& [s, m] : std::get<std::vector<Entry>>(storage_)) fn(s, m);
    }
  }

  Scalar mass(State state) const {
    if (const auto* v = std::get_if<Vector>(&storage_))
      return static_cast<Eigen::Index>(state) < v->size() ? (*v)[state] : Scalar(0);
    const auto& e = std::get<std::vector<Entry>>(storage_);
    auto it = std::lower_bound(e.begin(), e.end(), state,
                               [](const Entry& a, State s) { return a.first < s; });
    return it != e.end() && it->first == state ? it->second : Scalar(0);
  }

  std::size_t support_size() const {
    std::size_t n = 0;
    for_each([&](State, const Scalar&) { ++n; });
    return n;
  }

  Scalar total_mass() const {
    Scalar sum(0);
    for_each([&](State, const Scalar& m) { sum += m; });
    return sum;
  }

  /// Nonzero entries, ascending by state.
  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for_each([&](State s, const Scalar& m) { out.emplace_back(s, m); });
    return out;
  }

  /// Masses may be negative only in malformed input; see is_distribution().
  bool has_negative_mass() const {
    bool negative = false;
    if (const auto* v = std::get_if<Vector>(&storage_)) {
      for (Eigen::Index s = 0; s < v->size(); ++s) negative |= (*v)[s] < Scalar(0);
    } else {
      for (const auto& [s, m] : std::get<std::vector<Entry>>(storage_)) negative |= m < Scalar(0);
    }
    return negative;
  }

 private:
  int attribute_count_ = 0;
  std::variant<std::vector<Entry>, Vector> storage_;
};

using ExactDistribution = JointDistribution<Rational>;
using FloatDistribution = JointDistribution<double>;

/// Nonnegative masses summing to exactly 1 (exact) or to 1 within 1e-12.
template <typename Scalar>
bool is_distribution(const JointDistribution<Scalar>& p) {
  if (p.has_negative_mass()) return false;
  if constexpr (mode_of<Scalar> == DistributionMode::exact) {
    return p.total_mass() == Scalar(1);
  } else {
    using std::abs;
    return abs(p.total_mass() - Scalar(1)) <= Scalar(1e-12);
  }
}

/// Positions of B's items, spread over the state space according to t.
inline State spread_pattern(Itemset items, const BinaryVector& t) {
  State target = 0;
  int i = 0;
  for (std::uint64_t rest = items.mask(); rest != 0; rest &= rest - 1, ++i)
    if (t[i]) target |= rest & (~rest + 1);
  return target;
}

/// p(B = t): mass of the states agreeing with t on B's attributes.
template <typename Scalar>
Scalar event_probability(const JointDistribution<Scalar>& p, Itemset items, const BinaryVector& t) {
  if (t.length() != items.size())
    throw MalformedInput("pattern length " + std::to_string(t.length()) +
                         " does not match itemset size " + std::to_string(items.size()));
  if (items.extent() > p.attribute_count())
    throw MalformedInput("itemset refers to an attribute outside the distribution");
  const State target = spread_pattern(items, t);
  const std::uint64_t mask = items.mask();
  Scalar sum(0);
  p.for_each([&](State s, const Scalar& m) {
    if ((s & mask) == target) sum += m;
  });
  return sum;
}

/// p(B = 1).
template <typename Scalar>
Scalar frequency(const JointDistribution<Scalar>& p, Itemset items) {
  return event_probability(p, items, BinaryVector::ones(items.size()));
}

/// |p(F_i = 1) − θ_i| ≤ tol for every member; exact mode compares exactly
/// and ignores tol.
template <typename Scalar>
bool satisfies(const JointDistribution<Scalar>& p, const ItemsetFamily& family,
               const FrequencyAssignment& theta, double tol = 0.0) {
  if (theta.size() != family.size()) return false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].extent() > p.attribute_count()) return false;
    const Scalar f = frequency(p, family[i]);
    if constexpr (mode_of<Scalar> == DistributionMode::exact) {
      if (f != theta[i]) return false;
    } else {
      using std::abs;
      if (abs(f - to_double(theta[i])) > tol) return false;
    }
  }
  return true;
}

}  // namespace itemq
