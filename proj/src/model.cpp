#include "itemq/model.hpp"

#include <set>

namespace itemq {

Itemset::Itemset(std::initializer_list<int> attributes)
    : Itemset(from_indices(std::span<const int>(attributes.begin(), attributes.size()))) {}

Itemset Itemset::from_indices(std::span<const int> attributes) {
  std::uint64_t mask = 0;
  for (int a : attributes) {
    if (a < 0 || a >= kMaxAttributes)
      throw MalformedInput("attribute index " + std::to_string(a) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << a;
    if (mask & bit) throw MalformedInput("duplicate attribute " + std::to_string(a) + " in itemset");
    mask |= bit;
  }
  return Itemset(mask);
}

std::vector<int> Itemset::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

bool canonical_less(Itemset a, Itemset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal sizes: compare ascending index lists lexicographically. The first
  // differing lowest bit decides: the set owning it sorts first.
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  return (a.mask() & low) != 0;
}

BinaryVector::BinaryVector(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > 64) throw MalformedInput("binary vector length out of range");
  if (length < 64 && (bits >> length) != 0) throw MalformedInput("binary vector has stray bits");
}

BinaryVector BinaryVector::parse(std::string_view text) {
  if (text.size() > 64) throw MalformedInput("binary vector longer than 64 entries");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') bits |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw MalformedInput("binary vector '" + std::string(text) + "' has a character other than 0/1");
  }
  return BinaryVector(bits, static_cast<int>(text.size()));
}

BinaryVector BinaryVector::ones(int length) {
  return BinaryVector(length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1, length);
}

std::string BinaryVector::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i)
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

ItemsetFamily::ItemsetFamily(std::vector<Itemset> members, int attribute_count)
    : members_(std::move(members)), attribute_count_(attribute_count) {
  if (attribute_count < 0 || attribute_count > kMaxAttributes)
    throw MalformedInput("attribute count " + std::to_string(attribute_count) + " out of range");
  index_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].extent() > attribute_count)
      throw MalformedInput("family member refers to an attribute index >= " +
                           std::to_string(attribute_count));
    if (!index_.emplace(members_[i].mask(), i).second)
      throw MalformedInput("family lists the same itemset twice");
  }
}

std::optional<std::size_t> ItemsetFamily::index_of(Itemset itemset) const {
  if (auto it = index_.find(itemset.mask()); it != index_.end()) return it->second;
  return std::nullopt;
}

FrequencyAssignment::FrequencyAssignment(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v < 0 || v > 1) throw MalformedInput("frequency " + to_string(v) + " outside [0, 1]");
}

void validate_alignment(const ItemsetFamily& family, const FrequencyAssignment& theta) {
  if (family.size() != theta.size())
    throw MalformedInput("frequency vector has " + std::to_string(theta.size()) +
                         " entries for a family of " + std::to_string(family.size()));
  if (auto empty = family.index_of(Itemset{}); empty && theta[*empty] != 1)
    throw MalformedInput("the empty itemset must have frequency 1");
}

ItemsetFamily downward_closure(std::span<const Itemset> seeds, int attribute_count) {
  std::set<std::uint64_t> seen;
  std::vector<Itemset> out;
  for (Itemset seed : seeds) {
    if (seed.extent() > attribute_count)
      throw MalformedInput("seed itemset refers to an attribute index >= " +
                           std::to_string(attribute_count));
    // Enumerate every submask of the seed, including the empty set.
    const std::uint64_t full = seed.mask();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      if (seen.insert(sub).second) out.emplace_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return ItemsetFamily(std::move(out), attribute_count);
}

std::vector<Itemset> missing_subsets(const ItemsetFamily& family) {
  // Checking immediate subsets suffices: by induction on size every subset
  // of a member is then present.
  std::set<std::uint64_t> missing;
  for (Itemset member : family) {
    for (std::uint64_t rest = member.mask(); rest != 0; rest &= rest - 1) {
      const Itemset sub(member.mask() & ~(rest & (~rest + 1)));
      if (!family.contains(sub)) missing.insert(sub.mask());
    }
  }
  std::vector<Itemset> out;
  for (auto m : missing) out.emplace_back(m);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_antimonotonic(const ItemsetFamily& family) {
  for (Itemset member : family)
    for (std::uint64_t rest = member.mask(); rest != 0; rest &= rest - 1)
      if (!family.contains(Itemset(member.mask() & ~(rest & (~rest + 1))))) return false;
  return true;
}

void require_antimonotonic(const ItemsetFamily& family) {
  auto missing = missing_subsets(family);
  if (missing.empty()) return;
  std::string names;
  for (int a : missing.front().indices()) names += (names.empty() ? "" : ",") + std::to_string(a);
  throw PreconditionViolation("family is not antimonotonic: subset {" + names + "} is missing (" +
                              std::to_string(missing.size()) + " missing in total)");
}

void require_attribute_limit(int attribute_count, int limit) {
  if (attribute_count > limit)
    throw ResourceLimit("sample space of " + std::to_string(attribute_count) +
                        " attributes exceeds the limit of " + std::to_string(limit));
}

}  // namespace itemq
