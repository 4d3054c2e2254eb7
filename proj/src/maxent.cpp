#include "itemq/maxent.hpp"

#include <algorithm>
#include <limits>

#include "itemq/projection.hpp"

namespace itemq {
namespace {

struct Constraint {
  std::uint64_t mask;
  double target;
};

double event_mass(const Eigen::VectorXd& p, std::uint64_t mask) {
  double m = 0.0;
  for (Eigen::Index s = 0; s < p.size(); ++s)
    if ((static_cast<std::uint64_t>(s) & mask) == mask) m += p[s];
  return m;
}

// Largest constraint violation, from the superset sums of p.
double max_residual(const Eigen::VectorXd& p, int attribute_count,
                    const std::vector<Constraint>& constraints) {
  Eigen::VectorXd up = p;
  for (int bit = 0; bit < attribute_count; ++bit) {
    const Eigen::Index step = Eigen::Index{1} << bit;
    for (Eigen::Index s = 0; s < up.size(); ++s)
      if (!(s & step)) up[s] += up[s | step];
  }
  double r = 0.0;
  for (const auto& c : constraints)
    r = std::max(r, std::abs(up[static_cast<Eigen::Index>(c.mask)] - c.target));
  return r;
}

void zero_cell(Eigen::VectorXd& p, std::uint64_t mask, State pattern) {
  for (Eigen::Index s = 0; s < p.size(); ++s)
    if ((static_cast<std::uint64_t>(s) & mask) == pattern) p[s] = 0.0;
}

}  // namespace

MaxEntResult fit_maxent(const ItemsetFamily& family, const FrequencyAssignment& theta,
                        Itemset query, const MaxEntOptions& options) {
  validate_alignment(family, theta);
  require_antimonotonic(family);
  require_attribute_limit(options.attribute_limit, kDenseAttributeLimit);
  require_attribute_limit(family.attribute_count(), options.attribute_limit);
  const int k = family.attribute_count();
  if (query.extent() > k)
    throw MalformedInput("query refers to an attribute index >= " + std::to_string(k));

  std::vector<std::size_t> order(family.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return canonical_less(family[a], family[b]); });

  std::vector<Constraint> constraints;
  for (std::size_t i : order)
    if (!family[i].empty()) constraints.push_back({family[i].mask(), to_double(theta[i])});

  Eigen::VectorXd p = Eigen::VectorXd::Ones(Eigen::Index{1} << k);

  // Zero events are applied once, permanently; rescaling keeps them at zero.
  for (std::size_t i : order) {
    const Itemset member = family[i];
    if (member.empty()) continue;
    if (!options.zero_forced_cells) {
      if (theta[i] == 0) zero_cell(p, member.mask(), member.mask());
      continue;
    }
    const std::uint64_t patterns = std::uint64_t{1} << member.size();
    for (std::uint64_t t = 0; t < patterns; ++t) {
      const BinaryVector pattern(t, member.size());
      if (project(family, theta, member, pattern).value == 0)
        zero_cell(p, member.mask(), spread_pattern(member, pattern));
    }
  }

  MaxEntResult result;
  const double total = p.sum();
  if (total <= 0.0) {
    // Every state is excluded: the frequencies are inconsistent.
    p.setConstant(1.0 / static_cast<double>(p.size()));
    result.residual = max_residual(p, k, constraints);
  } else {
    p /= total;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    result.residual = max_residual(p, k, constraints);
    while (result.residual > options.tolerance && result.iterations < options.max_iterations) {
      for (const auto& c : constraints) {
        const double m = event_mass(p, c.mask);
        if (std::abs(m - c.target) <= kEps) continue;
        // m = 0 or m = 1 cannot be rescaled toward a different target.
        if (m <= 0.0 || m >= 1.0) continue;
        const double inside = c.target / m;
        const double outside = (1.0 - c.target) / (1.0 - m);
        for (Eigen::Index s = 0; s < p.size(); ++s)
          p[s] *= (static_cast<std::uint64_t>(s) & c.mask) == c.mask ? inside : outside;
      }
      p /= p.sum();
      ++result.iterations;
      result.residual = max_residual(p, k, constraints);
    }
    result.converged = result.residual <= options.tolerance;
  }

  result.query_frequency = event_mass(p, query.mask());
  result.distribution = FloatDistribution::dense(k, std::move(p));
  return result;
}

const char* to_string(Decision decision) {
  switch (decision) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::indeterminate: return "indeterminate";
  }
  return "unknown";
}

Decision decide_entr_query(const MaxEntResult& fit, const Rational& threshold, double tolerance) {
  if (!fit.converged) return Decision::indeterminate;
  const double b = to_double(threshold);
  if (fit.query_frequency > b + tolerance) return Decision::yes;
  if (fit.query_frequency < b - tolerance) return Decision::no;
  // An event with no mass at all is exactly 0, not 0 up to rounding.
  if (fit.query_frequency == 0.0 && b >= 0.0) return Decision::no;
  return Decision::indeterminate;
}

Decision decide_entr_query(const ItemsetFamily& family, const FrequencyAssignment& theta,
                           Itemset query, const Rational& threshold, const MaxEntOptions& options) {
  return decide_entr_query(fit_maxent(family, theta, query, options), threshold, options.tolerance);
}

}  // namespace itemq
