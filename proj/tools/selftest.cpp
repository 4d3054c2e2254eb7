#include "selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "itemq/generators.hpp"
#include "itemq/lp_engine.hpp"
#include "itemq/maxent.hpp"
#include "itemq/oracle.hpp"
#include "itemq/reduction.hpp"

namespace itemq::tools {
namespace {

struct Suite {
  std::string name;
  std::function<std::string(int)> run;  // empty string on success, else the failure
};

ItemsetFamily intro_family() { return ItemsetFamily({Itemset{}, Itemset{0}, Itemset{1}}, 2); }
FrequencyAssignment intro_theta() {
  return FrequencyAssignment({Rational(1), Rational(3, 5), Rational(1, 2)});
}

}  // namespace

bool run_selftest(std::ostream& out, int rounds, bool json) {
  std::vector<Suite> suites;

  suites.push_back({"intro interval [1/10, 1/2]", [](int) -> std::string {
    const auto b = query_bounds(intro_family(), intro_theta(), Itemset{0, 1});
    if (b.lo != Rational(1, 10) || b.hi != Rational(1, 2))
      return "got [" + to_string(b.lo) + ", " + to_string(b.hi) + "]";
    return "";
  }});

  suites.push_back({"example formula max c1c2 = 1/2", [](int) -> std::string {
    const auto r = reduce_max_query(parse_dimacs("p cnf 3 2\n1 2 0\n-2 3 0\n"));
    const auto hi = max_query_frequency(r.family, r.theta, *r.query).value;
    return hi == Rational(1, 2) ? "" : "got " + to_string(hi);
  }});

  suites.push_back({"exact LP vs float LP", [](int n) -> std::string {
    std::mt19937_64 rng(7);
    for (int i = 0; i < n; ++i) {
      const int k = std::uniform_int_distribution<int>(2, 8)(rng);
      const auto inst = oracle::random_consistent_instance(rng, k);
      const auto exact = query_bounds(inst.family, inst.theta, inst.query);
      const auto approx = oracle::float_lp_bounds(inst.family, inst.theta, inst.query);
      if (!approx) return "float LP reported infeasible on instance " + std::to_string(i);
      if (std::abs(to_double(exact.lo) - approx->lo) > 1e-7 ||
          std::abs(to_double(exact.hi) - approx->hi) > 1e-7)
        return "bounds disagree on instance " + std::to_string(i);
    }
    return "";
  }});

  suites.push_back({"max-query reduction vs #SAT", [](int n) -> std::string {
    std::mt19937_64 rng(11);
    for (int i = 0; i < n; ++i) {
      const auto f = oracle::random_cnf(rng, 5, 6);
      const auto r = reduce_max_query(f);
      if (decide_max_query(r.family, r.theta, *r.query, 0) != (oracle::count_satisfying(f) > 0))
        return "mismatch on formula " + std::to_string(i);
    }
    return "";
  }});

  suites.push_back({"consistency reduction vs #SAT", [](int n) -> std::string {
    std::mt19937_64 rng(13);
    for (int i = 0; i < n; ++i) {
      const auto f = oracle::random_cnf(rng, 5, 6);
      const auto r = reduce_consistent(f);
      if (check_consistent(r.family, r.theta).consistent != (oracle::count_satisfying(f) > 0))
        return "mismatch on formula " + std::to_string(i);
    }
    return "";
  }});

  suites.push_back({"MaxEnt of W = #SAT / 2^L", [](int n) -> std::string {
    std::mt19937_64 rng(17);
    for (int i = 0; i < n; ++i) {
      const auto f = oracle::random_cnf(rng, 5, 6);
      const auto r = reduce_max_query(f);
      const auto fit = fit_maxent(r.family, r.theta, *r.query);
      const double expected = std::ldexp(static_cast<double>(oracle::count_satisfying(f)), -f.variable_count());
      if (!fit.converged || std::abs(fit.query_frequency - expected) > 1e-6)
        return "estimate off on formula " + std::to_string(i);
    }
    return "";
  }});

  bool all = true;
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const auto& suite : suites) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = suite.run(rounds);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && failure.empty();
    if (json) {
      report.push_back({{"suite", suite.name}, {"pass", failure.empty()}, {"detail", failure},
                        {"seconds", seconds}});
    } else {
      out << (failure.empty() ? "PASS  " : "FAIL  ") << suite.name;
      if (!failure.empty()) out << "  (" << failure << ")";
      out << "\n";
    }
  }
  if (json) out << report.dump() << "\n";
  return all;
}

}  // namespace itemq::tools
