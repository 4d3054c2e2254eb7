#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "itemq/model.hpp"

namespace itemq {

struct Literal {
  int variable = 0;  // 0-based
  bool positive = true;
  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

/// CNF formula with clauses of one to three literals.
class CnfFormula {
 public:
  CnfFormula() = default;
  /// Throws MalformedInput for an empty clause, a clause wider than three
  /// literals, a repeated literal, or a variable index outside [0, L).
  CnfFormula(int variable_count, std::vector<Clause> clauses);

  int variable_count() const { return variable_count_; }
  std::size_t clause_count() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Variables of clause i as an itemset over the variable attributes.
  Itemset variables_of(std::size_t clause) const;

 private:
  int variable_count_ = 0;
  std::vector<Clause> clauses_;
};

/// Bit j of the assignment is the value of variable j.
bool clause_satisfied(const Clause& clause, std::uint64_t assignment);
bool formula_satisfied(const CnfFormula& formula, std::uint64_t assignment);

/// DIMACS subset: comment lines starting with 'c', a "p cnf L M" header,
/// then clauses of signed 1-based variable indices, each terminated by 0.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

enum class ReductionMode { max_query, consistent };

/// Instance built from a formula. Attributes are v1..vL (indices 0..L-1),
/// then c1..cM (L..L+M-1), then c0 (index L+M) in consistency mode. The family
/// is in canonical order.
struct ReductionInstance {
  ReductionMode mode = ReductionMode::max_query;
  ItemsetFamily family;
  FrequencyAssignment theta;
  /// W = c1..cM in max-query mode; absent in consistency mode.
  std::optional<Itemset> query;
  Rational threshold = 0;
  std::vector<std::string> attribute_names;
};

/// Family: the downward closure of vars(C_i) ∪ {c_i} over all clauses.
/// Frequencies are those of the construction distribution (uniform variables,
/// clause items equal to the clause truth values), as exact dyadic rationals.
/// Throws MalformedInput when L = 0 or M = 0 and ResourceLimit when
/// L + M exceeds attribute_limit.
ReductionInstance reduce_max_query(const CnfFormula& formula,
                                   int attribute_limit = kDenseAttributeLimit);

/// reduce_max_query plus attribute c0 and members {c0}, {c0, c_i} with
/// frequency 2^-L. Consistent iff the formula is satisfiable.
ReductionInstance reduce_consistent(const CnfFormula& formula,
                                    int attribute_limit = kDenseAttributeLimit);

/// Mass 2^-L on each state (t, C_1(t), ..., C_M(t)) over the L + M
/// attributes of the max-query instance.
ExactDistribution construction_distribution(const CnfFormula& formula,
                                            int attribute_limit = kDenseAttributeLimit);

}  // namespace itemq
