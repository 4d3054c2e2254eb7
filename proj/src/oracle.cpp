#include "itemq/oracle.hpp"

#include <limits>

#include <Eigen/Dense>

namespace itemq::oracle {

std::uint64_t count_satisfying(const CnfFormula& formula) {
  require_attribute_limit(formula.variable_count(), kSatCountLimit);
  std::uint64_t count = 0;
  const std::uint64_t n = std::uint64_t{1} << formula.variable_count();
  for (std::uint64_t a = 0; a < n; ++a) {
    bool ok = true;
    for (const auto& clause : formula.clauses()) {
      bool sat = false;
      for (const auto& lit : clause) sat = sat || ((((a >> lit.variable) & 1U) != 0) == lit.positive);
      if (!sat) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

namespace {

constexpr double kPivotEps = 1e-9;

// Dense tableau: rows 0..m-1 are constraints, row m is the reduced-cost row,
// the last column is the right-hand side. Columns 0..n-1 are states, n..n+m-1
// artificials.
class DenseTableau {
 public:
  DenseTableau(const Eigen::MatrixXd& a, const Eigen::VectorXd& b)
      : m_(a.rows()), n_(a.cols()), t_(Eigen::MatrixXd::Zero(m_ + 1, n_ + m_ + 1)), basis_(m_) {
    t_.topLeftCorner(m_, n_) = a;
    t_.block(0, n_, m_, m_).setIdentity();
    t_.col(n_ + m_).head(m_) = b;
    for (Eigen::Index i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  bool phase_one() {
    // Minimize the artificial sum: reduced costs are −(column sums) on states.
    t_.row(m_).setZero();
    for (Eigen::Index i = 0; i < m_; ++i) {
      t_.row(m_).head(n_) -= t_.row(i).head(n_);
      t_(m_, n_ + m_) -= t_(i, n_ + m_);
    }
    iterate();
    if (-t_(m_, n_ + m_) > 1e-9) return false;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      Eigen::Index col;
      if (t_.row(i).head(n_).cwiseAbs().maxCoeff(&col) > kPivotEps) pivot(i, col);
    }
    return true;
  }

  // Minimizes cost·x over the states; returns the optimal objective.
  double phase_two(const Eigen::VectorXd& cost) {
    t_.row(m_).setZero();
    t_.row(m_).head(n_) = cost.transpose();
    for (Eigen::Index i = 0; i < m_; ++i)
      if (basis_[i] < n_ && cost[basis_[i]] != 0.0) t_.row(m_) -= cost[basis_[i]] * t_.row(i);
    iterate();
    return -t_(m_, n_ + m_);
  }

 private:
  // Largest-coefficient pricing; falls back to smallest-index pricing after a
  // generous iteration budget in case degenerate pivots start to cycle.
  void iterate() {
    const std::size_t dantzig_budget = static_cast<std::size_t>(20 * (m_ + n_));
    for (std::size_t iter = 0;; ++iter) {
      Eigen::Index enter = -1;
      if (iter < dantzig_budget) {
        Eigen::Index col;
        if (t_.row(m_).head(n_).minCoeff(&col) < -kPivotEps) enter = col;
      } else {
        for (Eigen::Index j = 0; j < n_ && enter < 0; ++j)
          if (t_(m_, j) < -kPivotEps) enter = j;
      }
      if (enter < 0) return;
      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (t_(i, enter) <= kPivotEps) continue;
        const double ratio = t_(i, n_ + m_) / t_(i, enter);
        if (ratio < best - 1e-12) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return;  // unbounded; cannot happen on the simplex of distributions
      pivot(leave, enter);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  Eigen::Index m_;
  Eigen::Index n_;
  Eigen::MatrixXd t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

std::optional<FloatBounds> float_lp_bounds(const ItemsetFamily& family,
                                           const FrequencyAssignment& theta, Itemset query) {
  validate_alignment(family, theta);
  const int k = family.attribute_count();
  require_attribute_limit(k, kFloatLpAttributeLimit);
  const Eigen::Index n = Eigen::Index{1} << k;

  // One row per member; the empty member doubles as the normalization row.
  std::vector<std::pair<std::uint64_t, double>> rows;
  bool has_empty = false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    rows.emplace_back(family[i].mask(), to_double(theta[i]));
    has_empty = has_empty || family[i].empty();
  }
  if (!has_empty) rows.emplace_back(0, 1.0);

  Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), n);
  Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    const auto [mask, rhs] = rows[static_cast<std::size_t>(r)];
    for (Eigen::Index s = 0; s < n; ++s) a(r, s) = (static_cast<std::uint64_t>(s) & mask) == mask;
    b[r] = rhs;
  }

  Eigen::VectorXd indicator(n);
  for (Eigen::Index s = 0; s < n; ++s)
    indicator[s] = (static_cast<std::uint64_t>(s) & query.mask()) == query.mask() ? 1.0 : 0.0;

  DenseTableau feasible(a, b);
  if (!feasible.phase_one()) return std::nullopt;
  DenseTableau for_min = feasible;
  DenseTableau for_max = feasible;
  FloatBounds out;
  out.lo = for_min.phase_two(indicator);
  out.hi = -for_max.phase_two(-indicator);
  return out;
}

}  // namespace itemq::oracle
