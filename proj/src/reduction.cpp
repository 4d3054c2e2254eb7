#include "itemq/reduction.hpp"

#include <istream>
#include <sstream>

namespace itemq {

CnfFormula::CnfFormula(int variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
  if (variable_count < 0 || variable_count > kMaxAttributes)
    throw MalformedInput("variable count " + std::to_string(variable_count) + " out of range");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const auto& clause = clauses_[i];
    const std::string where = "clause " + std::to_string(i + 1);
    if (clause.empty()) throw MalformedInput(where + " is empty");
    if (clause.size() > 3)
      throw MalformedInput(where + " has " + std::to_string(clause.size()) +
                           " literals; at most 3 are allowed");
    for (std::size_t a = 0; a < clause.size(); ++a) {
      if (clause[a].variable < 0 || clause[a].variable >= variable_count)
        throw MalformedInput(where + " uses an undeclared variable");
      for (std::size_t b = 0; b < a; ++b)
        if (clause[a] == clause[b]) throw MalformedInput(where + " repeats a literal");
    }
  }
}

Itemset CnfFormula::variables_of(std::size_t clause) const {
  std::uint64_t mask = 0;
  for (const auto& lit : clauses_.at(clause)) mask |= std::uint64_t{1} << lit.variable;
  return Itemset(mask);
}

bool clause_satisfied(const Clause& clause, std::uint64_t assignment) {
  for (const auto& lit : clause)
    if ((((assignment >> lit.variable) & 1U) != 0) == lit.positive) return true;
  return false;
}

bool formula_satisfied(const CnfFormula& formula, std::uint64_t assignment) {
  for (const auto& clause : formula.clauses())
    if (!clause_satisfied(clause, assignment)) return false;
  return true;
}

CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  std::optional<std::pair<long, long>> header;
  std::vector<Clause> clauses;
  Clause current;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok.front() == 'c') continue;
    if (tok == "p") {
      std::string format;
      long vars = -1, count = -1;
      if (header || !(ls >> format >> vars >> count) || format != "cnf" || vars < 0 || count < 0)
        throw MalformedInput("line " + std::to_string(line_no) + ": bad 'p cnf' header");
      header = {vars, count};
      continue;
    }
    if (!header) throw MalformedInput("line " + std::to_string(line_no) + ": clause before header");
    do {
      long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw MalformedInput("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long var = lit < 0 ? -lit : lit;
      if (var > header->first)
        throw MalformedInput("line " + std::to_string(line_no) + ": variable " +
                             std::to_string(var) + " exceeds the declared count");
      current.push_back({static_cast<int>(var - 1), lit > 0});
    } while (ls >> tok);
  }
  if (!header) throw MalformedInput("missing 'p cnf' header");
  if (!current.empty()) throw MalformedInput("last clause is not terminated by 0");
  if (static_cast<long>(clauses.size()) != header->second)
    throw MalformedInput("header declares " + std::to_string(header->second) + " clauses, found " +
                         std::to_string(clauses.size()));
  if (header->first > kMaxAttributes) throw MalformedInput("too many variables");
  return CnfFormula(static_cast<int>(header->first), std::move(clauses));
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

namespace {

void require_reducible(const CnfFormula& formula, int attribute_count, int attribute_limit) {
  if (formula.variable_count() < 1) throw MalformedInput("formula needs at least one variable");
  if (formula.clause_count() < 1) throw MalformedInput("formula needs at least one clause");
  require_attribute_limit(attribute_count, std::min(attribute_limit, kMaxAttributes));
}

std::vector<std::string> attribute_names(const CnfFormula& formula, bool with_c0) {
  std::vector<std::string> names;
  for (int j = 0; j < formula.variable_count(); ++j) names.push_back("v" + std::to_string(j + 1));
  for (std::size_t i = 0; i < formula.clause_count(); ++i) names.push_back("c" + std::to_string(i + 1));
  if (with_c0) names.emplace_back("c0");
  return names;
}

// Frequency of a member under the construction distribution. A member holds
// at most one clause item c_i, and then its variables lie inside vars(C_i),
// so enumerating the assignments of vars(C_i) suffices.
Rational construction_frequency(const CnfFormula& formula, Itemset member) {
  const int l = formula.variable_count();
  const std::uint64_t var_mask = l >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1;
  const std::uint64_t vars = member.mask() & var_mask;
  const std::uint64_t clause_items = member.mask() & ~var_mask;
  if (clause_items == 0) return dyadic(static_cast<unsigned>(std::popcount(vars)));

  const auto clause = static_cast<std::size_t>(std::countr_zero(clause_items) - l);
  const std::uint64_t scope = formula.variables_of(clause).mask();
  const auto& literals = formula.clauses()[clause];
  std::uint64_t hits = 0;
  for (std::uint64_t a = scope;; a = (a - 1) & scope) {
    if ((a & vars) == vars && clause_satisfied(literals, a)) ++hits;
    if (a == 0) break;
  }
  return Rational(BigInt(hits)) * dyadic(static_cast<unsigned>(std::popcount(scope)));
}

}  // namespace

ReductionInstance reduce_max_query(const CnfFormula& formula, int attribute_limit) {
  const int l = formula.variable_count();
  const int m = static_cast<int>(formula.clause_count());
  require_reducible(formula, l + m, attribute_limit);

  std::vector<Itemset> seeds;
  for (int i = 0; i < m; ++i)
    seeds.push_back(formula.variables_of(static_cast<std::size_t>(i)) | Itemset(std::uint64_t{1} << (l + i)));
  ItemsetFamily family = downward_closure(seeds, l + m);

  std::vector<Rational> theta;
  theta.reserve(family.size());
  for (Itemset member : family) theta.push_back(construction_frequency(formula, member));

  std::uint64_t w = 0;
  for (int i = 0; i < m; ++i) w |= std::uint64_t{1} << (l + i);

  ReductionInstance out;
  out.mode = ReductionMode::max_query;
  out.family = std::move(family);
  out.theta = FrequencyAssignment(std::move(theta));
  out.query = Itemset(w);
  out.threshold = 0;
  out.attribute_names = attribute_names(formula, false);
  return out;
}

ReductionInstance reduce_consistent(const CnfFormula& formula, int attribute_limit) {
  const int l = formula.variable_count();
  const int m = static_cast<int>(formula.clause_count());
  require_reducible(formula, l + m + 1, attribute_limit);
  const ReductionInstance base = reduce_max_query(formula, attribute_limit);

  const int c0 = l + m;
  std::vector<std::pair<Itemset, Rational>> members;
  for (std::size_t i = 0; i < base.family.size(); ++i)
    members.emplace_back(base.family[i], base.theta[i]);
  const Rational share = dyadic(static_cast<unsigned>(l));
  members.emplace_back(Itemset{c0}, share);
  for (int i = 0; i < m; ++i) members.emplace_back(Itemset{c0, l + i}, share);
  std::stable_sort(members.begin(), members.end(),
                   [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });

  std::vector<Itemset> items;
  std::vector<Rational> theta;
  for (auto& [item, f] : members) {
    items.push_back(item);
    theta.push_back(std::move(f));
  }

  ReductionInstance out;
  out.mode = ReductionMode::consistent;
  out.family = ItemsetFamily(std::move(items), l + m + 1);
  out.theta = FrequencyAssignment(std::move(theta));
  out.threshold = 0;
  out.attribute_names = attribute_names(formula, true);
  return out;
}

ExactDistribution construction_distribution(const CnfFormula& formula, int attribute_limit) {
  const int l = formula.variable_count();
  const int m = static_cast<int>(formula.clause_count());
  require_attribute_limit(l + m, std::min(attribute_limit, kDenseAttributeLimit));
  const Rational mass = dyadic(static_cast<unsigned>(l));
  std::vector<ExactDistribution::Entry> entries;
  entries.reserve(std::size_t{1} << l);
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << l); ++t) {
    State s = t;
    for (int i = 0; i < m; ++i)
      if (clause_satisfied(formula.clauses()[static_cast<std::size_t>(i)], t))
        s |= std::uint64_t{1} << (l + i);
    entries.emplace_back(s, mass);
  }
  return ExactDistribution::sparse(l + m, std::move(entries));
}

}  // namespace itemq
