#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "itemq/model.hpp"
#include "itemq/reduction.hpp"

namespace itemq::io {

/// Instance file (JSON):
///   {
///     "attributes": ["a", "b"],
///     "constraints": [{"itemset": [], "frequency": "1"},
///                     {"itemset": ["a"], "frequency": "3/5"}, ...],
///     "query": ["a", "b"],          // optional
///     "threshold": "1/4"            // optional
///   }
/// Frequencies are "p/q", integers or plain decimals; they must lie in [0,1].
struct Instance {
  std::vector<std::string> attributes;
  ItemsetFamily family;
  FrequencyAssignment theta;
  std::optional<Itemset> query;
  std::optional<Rational> threshold;

  bool operator==(const Instance&) const = default;
};

/// Throws MalformedInput with a message naming the offending field.
Instance parse_instance(std::string_view text);
Instance read_instance(const std::string& path);

/// Byte-stable rendering: two-space indentation, one constraint per line,
/// lowest-terms rationals.
std::string emit_instance(const Instance& instance);

Instance to_instance(const ReductionInstance& reduction);

/// Resolves a comma-separated list of attribute names ("" is the empty set).
Itemset parse_itemset(const std::vector<std::string>& attributes, std::string_view names);
std::string itemset_names(const std::vector<std::string>& attributes, Itemset itemset);

/// Distribution file (JSON):
///   {"attributes": [...], "mode": "exact" | "float",
///    "entries": [{"state": "0110", "mass": "1/4"}, ...]}
/// Character i of a state string is the value of attribute i. Exact masses
/// are "p/q" strings; float masses are JSON numbers.
using AnyDistribution = std::variant<ExactDistribution, FloatDistribution>;

std::string emit_distribution(const ExactDistribution& p, const std::vector<std::string>& attributes);
std::string emit_distribution(const FloatDistribution& p, const std::vector<std::string>& attributes,
                              double min_mass = 0.0);

struct DistributionFile {
  std::vector<std::string> attributes;
  AnyDistribution distribution;
};

/// Checks nonnegative masses summing to 1 (exactly, or within 1e-9 for float
/// mode) and equal-length state strings. Throws MalformedInput.
DistributionFile parse_distribution(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace itemq::io
