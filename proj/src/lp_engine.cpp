#include "itemq/lp_engine.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

#include <Eigen/Core>

namespace itemq {
namespace {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Row weights brought over a common positive denominator.
struct ScaledWeights {
  std::vector<BigInt> numerators;
  BigInt denominator = 1;
  BigInt magnitude = 0;  // denominator + Σ|numerators|
};

ScaledWeights scale_to_integers(const std::vector<Rational>& weights) {
  ScaledWeights out;
  for (const auto& w : weights) out.denominator = boost::multiprecision::lcm(out.denominator, denominator(w));
  out.numerators.reserve(weights.size());
  out.magnitude = out.denominator;
  for (const auto& w : weights) {
    BigInt n = numerator(w) * (out.denominator / denominator(w));
    out.magnitude += abs(n);
    out.numerators.push_back(std::move(n));
  }
  return out;
}

template <typename Int>
Int narrow(const BigInt& v) {
  if constexpr (std::is_same_v<Int, BigInt>) return v;
  else return v.template convert_to<Int>();
}

// Visits the states in ascending order with G(ω) = D · Σ_{r: F_r ⊆ ω} w_r,
// computed for all ω at once by a subset-sum (zeta) transform in K·2^K
// integer additions. Stops early when visit returns true.
template <typename Int, typename Visit>
void visit_states(const FrequencyProgram& lp, const ScaledWeights& w, Visit&& visit) {
  const int k = lp.attribute_count();
  const std::size_t n = std::size_t{1} << k;
  std::vector<Int> g(n, Int(0));
  for (std::size_t r = 0; r < lp.row_count(); ++r)
    if (w.numerators[r] != 0) g[lp.rows()[r].mask()] += narrow<Int>(w.numerators[r]);
  for (int bit = 0; bit < k; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t s = 0; s < n; ++s)
      if (s & step) g[s] += g[s ^ step];
  }
  const Int d = narrow<Int>(w.denominator);
  for (std::size_t s = 0; s < n; ++s)
    if (visit(g[s], d, static_cast<State>(s))) return;
}

template <typename Visit>
void scan_states(const FrequencyProgram& lp, const ScaledWeights& w, Visit&& visit) {
  static const BigInt kInt64Safe = BigInt(1) << 62;
  if (!lp.wide_pricing() && w.magnitude < kInt64Safe) visit_states<std::int64_t>(lp, w, visit);
  else visit_states<BigInt>(lp, w, visit);
}

template <typename Pred>
std::optional<State> first_state_where(const FrequencyProgram& lp, const ScaledWeights& w, Pred&& pred) {
  std::optional<State> found;
  scan_states(lp, w, [&](const auto& g, const auto& d, State s) {
    if (!pred(g, d, s)) return false;
    found = s;
    return true;
  });
  return found;
}

enum class Sense { maximize, minimize };

// Revised simplex with an explicit exact basis inverse. Column ids order the
// variables: structural column ω has id ω, the artificial of
// row r has id 2^K + r.
//
// Pricing takes the most negative reduced cost (smallest ω on ties). The ratio
// test breaks ties lexicographically on the rows of B^{-1} B_0, where B_0 is
// the basis at the start of the phase; this is the perturbation argument
// against cycling and keeps the method finite under heavy degeneracy.
class RevisedSimplex {
 public:
  explicit RevisedSimplex(const FrequencyProgram& lp)
      : lp_(lp), m_(static_cast<Eigen::Index>(lp.row_count())),
        artificial_base_(std::uint64_t{1} << lp.attribute_count()) {
    binv_ = Matrix::Identity(m_, m_);
    lex_ = Matrix::Identity(m_, m_);
    xb_.resize(m_);
    basis_.resize(static_cast<std::size_t>(m_));
    for (Eigen::Index r = 0; r < m_; ++r) {
      xb_[r] = lp.rhs()[static_cast<std::size_t>(r)];
      basis_[static_cast<std::size_t>(r)] = artificial_base_ + static_cast<std::uint64_t>(r);
    }
  }

  // Phase 1: minimize the sum of artificials. Artificials that leave never
  // re-enter. Returns false when the program is infeasible.
  bool find_feasible_basis() {
    run([&](std::uint64_t col) { return is_artificial(col) ? 1 : 0; });
    Rational infeasibility = 0;
    for (Eigen::Index i = 0; i < m_; ++i)
      if (is_artificial(basis_[static_cast<std::size_t>(i)])) infeasibility += xb_[i];
    if (infeasibility != 0) return false;
    drive_out_artificials();
    return true;
  }

  // Phase 2 from a feasible basis.
  void optimize(Itemset query, Sense sense) {
    const int sign = sense == Sense::maximize ? -1 : 1;  // minimize c·x
    run([&](std::uint64_t col) { return !is_artificial(col) && query.covered_by(col) ? sign : 0; });
  }

  ExactDistribution basic_solution() const {
    std::vector<ExactDistribution::Entry> entries;
    for (Eigen::Index i = 0; i < m_; ++i) {
      const auto col = basis_[static_cast<std::size_t>(i)];
      if (!is_artificial(col) && xb_[i] != 0) entries.emplace_back(col, xb_[i]);
    }
    return ExactDistribution::sparse(lp_.attribute_count(), std::move(entries));
  }

  std::size_t pivots() const { return pivots_; }

 private:
  bool is_artificial(std::uint64_t col) const { return col >= artificial_base_; }

  template <typename CostFn>
  void run(CostFn&& cost) {
    lex_ = Matrix::Identity(m_, m_);
    for (;;) {
      // Simplex multipliers y = c_B^T B^{-1}.
      std::vector<Rational> y(static_cast<std::size_t>(m_), Rational(0));
      for (Eigen::Index i = 0; i < m_; ++i) {
        const int c = cost(basis_[static_cast<std::size_t>(i)]);
        if (c == 0) continue;
        for (Eigen::Index j = 0; j < m_; ++j)
          if (binv_(i, j) != 0) y[static_cast<std::size_t>(j)] += c * binv_(i, j);
      }
      // D · d_ω = c_ω · D − G(ω) with d_ω = c_ω − Σ_{F_r ⊆ ω} y_r.
      const auto entering = most_negative(scale_to_integers(y), cost);
      if (!entering) return;
      pivot_in(*entering);
    }
  }

  template <typename CostFn>
  std::optional<State> most_negative(const ScaledWeights& w, CostFn&& cost) const {
    static const BigInt kInt64Safe = BigInt(1) << 62;
    return !lp_.wide_pricing() && w.magnitude < kInt64Safe ? most_negative_as<std::int64_t>(w, cost)
                                    : most_negative_as<BigInt>(w, cost);
  }

  template <typename Int, typename CostFn>
  std::optional<State> most_negative_as(const ScaledWeights& w, CostFn&& cost) const {
    std::optional<State> best;
    Int best_value = 0;
    visit_states<Int>(lp_, w, [&](const Int& g, const Int& d, State s) {
      const Int value = cost(s) * d - g;
      if (value < best_value) {
        best = s;
        best_value = value;
      }
      return false;
    });
    return best;
  }

  // B^{-1} a_ω, where a_ω has a 1 in every row whose itemset ω covers.
  Vector entering_column(State s) const {
    Vector alpha = Vector::Zero(m_);
    for (Eigen::Index r = 0; r < m_; ++r)
      if (lp_.rows()[static_cast<std::size_t>(r)].covered_by(s)) alpha += binv_.col(r);
    return alpha;
  }

  // Lexicographic comparison of row a of [x_B | lex] / α_a against row b.
  bool lex_less(const Vector& alpha, Eigen::Index a, Eigen::Index b) const {
    const Rational lhs = xb_[a] * alpha[b];
    const Rational rhs = xb_[b] * alpha[a];
    if (lhs != rhs) return lhs < rhs;
    for (Eigen::Index j = 0; j < m_; ++j) {
      const Rational l = lex_(a, j) * alpha[b];
      const Rational r = lex_(b, j) * alpha[a];
      if (l != r) return l < r;
    }
    return basis_[static_cast<std::size_t>(a)] < basis_[static_cast<std::size_t>(b)];
  }

  void pivot_in(State s, Eigen::Index forced_row = -1) {
    const Vector alpha = entering_column(s);
    Eigen::Index leave = forced_row;
    if (leave < 0) {
      // Minimum ratio x_i / α_i over α_i > 0, ties broken lexicographically.
      for (Eigen::Index i = 0; i < m_; ++i)
        if (alpha[i] > 0 && (leave < 0 || lex_less(alpha, i, leave))) leave = i;
      if (leave < 0) throw std::logic_error("unbounded ray in a bounded polytope");
    }

    const Rational inv = Rational(1) / alpha[leave];
    eliminate(binv_, alpha, leave, inv);
    eliminate(lex_, alpha, leave, inv);
    xb_[leave] *= inv;
    if (xb_[leave] != 0)
      for (Eigen::Index i = 0; i < m_; ++i)
        if (i != leave && alpha[i] != 0) xb_[i] -= alpha[i] * xb_[leave];
    basis_[static_cast<std::size_t>(leave)] = s;
    ++pivots_;
  }

  // Row operations of a pivot on (leave, entering column alpha).
  void eliminate(Matrix& m, const Vector& alpha, Eigen::Index leave, const Rational& inv) const {
    std::vector<Eigen::Index> nonzero;
    for (Eigen::Index j = 0; j < m_; ++j) {
      if (m(leave, j) == 0) continue;
      m(leave, j) *= inv;
      nonzero.push_back(j);
    }
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == leave || alpha[i] == 0) continue;
      const Rational& f = alpha[i];
      for (Eigen::Index j : nonzero) m(i, j) -= f * m(leave, j);
    }
  }

  // After a zero-infeasibility phase 1, swap each remaining basic artificial
  // for any structural column with a nonzero entry in its row. Rows without
  // one are linearly dependent and keep their artificial at zero.
  void drive_out_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[static_cast<std::size_t>(i)])) continue;
      std::vector<Rational> row(static_cast<std::size_t>(m_));
      for (Eigen::Index j = 0; j < m_; ++j) row[static_cast<std::size_t>(j)] = binv_(i, j);
      const auto scaled = scale_to_integers(row);
      const auto s = first_state_where(lp_, scaled, [](const auto& g, const auto&, State) { return g != 0; });
      if (s) pivot_in(*s, i);
    }
  }

  const FrequencyProgram& lp_;
  Eigen::Index m_;
  std::uint64_t artificial_base_;
  Matrix binv_;
  Matrix lex_;
  Vector xb_;
  std::vector<std::uint64_t> basis_;
  std::size_t pivots_ = 0;
};

void check_query(const FrequencyProgram& lp, Itemset query) {
  if (query.extent() > lp.attribute_count())
    throw MalformedInput("query refers to an attribute index >= " +
                         std::to_string(lp.attribute_count()));
}

RevisedSimplex feasible_solver(const FrequencyProgram& lp) {
  RevisedSimplex solver(lp);
  if (!solver.find_feasible_basis())
    throw InconsistentFrequencies("no distribution satisfies the given frequencies");
  return solver;
}

QueryOptimum optimum_of(RevisedSimplex& solver, Itemset query, Sense sense) {
  solver.optimize(query, sense);
  auto witness = solver.basic_solution();
  Rational value = frequency(witness, query);
  return {std::move(value), std::move(witness)};
}

}  // namespace

FrequencyProgram::FrequencyProgram(const ItemsetFamily& family, const FrequencyAssignment& theta,
                                   const LpOptions& options)
    : attribute_count_(family.attribute_count()), wide_pricing_(options.wide_pricing) {
  if (options.attribute_limit > kDenseAttributeLimit)
    throw ResourceLimit("LP attribute limit may not exceed " + std::to_string(kDenseAttributeLimit));
  validate_alignment(family, theta);
  require_antimonotonic(family);
  require_attribute_limit(family.attribute_count(), options.attribute_limit);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) continue;
    rows_.push_back(family[i]);
    rhs_.push_back(theta[i]);
  }
  rows_.emplace_back();
  rhs_.emplace_back(1);
}

ConsistencyResult check_consistent(const ItemsetFamily& family, const FrequencyAssignment& theta,
                                   const LpOptions& options) {
  const FrequencyProgram lp(family, theta, options);
  RevisedSimplex solver(lp);
  if (!solver.find_feasible_basis()) return {false, std::nullopt};
  return {true, solver.basic_solution()};
}

QueryOptimum max_query_frequency(const ItemsetFamily& family, const FrequencyAssignment& theta,
                                 Itemset query, const LpOptions& options) {
  const FrequencyProgram lp(family, theta, options);
  check_query(lp, query);
  auto solver = feasible_solver(lp);
  return optimum_of(solver, query, Sense::maximize);
}

QueryOptimum min_query_frequency(const ItemsetFamily& family, const FrequencyAssignment& theta,
                                 Itemset query, const LpOptions& options) {
  const FrequencyProgram lp(family, theta, options);
  check_query(lp, query);
  auto solver = feasible_solver(lp);
  return optimum_of(solver, query, Sense::minimize);
}

QueryInterval query_bounds(const ItemsetFamily& family, const FrequencyAssignment& theta,
                           Itemset query, const LpOptions& options) {
  const FrequencyProgram lp(family, theta, options);
  check_query(lp, query);
  const auto feasible = feasible_solver(lp);
  RevisedSimplex for_max = feasible;
  RevisedSimplex for_min = feasible;
  auto hi = optimum_of(for_max, query, Sense::maximize);
  auto lo = optimum_of(for_min, query, Sense::minimize);
  return {std::move(lo.value), std::move(hi.value), std::move(lo.witness), std::move(hi.witness)};
}

bool decide_max_query(const ItemsetFamily& family, const FrequencyAssignment& theta, Itemset query,
                      const Rational& threshold, const LpOptions& options) {
  if (threshold >= 1) {
    // Still reject malformed or inconsistent input.
    const FrequencyProgram lp(family, theta, options);
    check_query(lp, query);
    feasible_solver(lp);
    return false;
  }
  return max_query_frequency(family, theta, query, options).value > threshold;
}

WitnessVerdict verify_witness(const ExactDistribution& p, const ItemsetFamily& family,
                              const FrequencyAssignment& theta, Itemset query,
                              const Rational& threshold) {
  if (p.attribute_count() != family.attribute_count() || !is_distribution(p))
    return WitnessVerdict::not_a_distribution;
  if (!satisfies(p, family, theta)) return WitnessVerdict::violates_theta;
  if (query.extent() > p.attribute_count() || !(frequency(p, query) > threshold))
    return WitnessVerdict::below_threshold;
  return WitnessVerdict::accepted;
}

const char* to_string(WitnessVerdict verdict) {
  switch (verdict) {
    case WitnessVerdict::accepted: return "accepted";
    case WitnessVerdict::not_a_distribution: return "not-a-distribution";
    case WitnessVerdict::violates_theta: return "violates-theta";
    case WitnessVerdict::below_threshold: return "below-threshold";
  }
  return "unknown";
}

}  // namespace itemq
