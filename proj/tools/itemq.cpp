// itemq: frequency entailment over itemsets from the command line.
//
// Exit codes: 0 success / consistent / above threshold, 1 inconsistent /
// not above threshold, 2 malformed input, 3 MaxEnt fit did not converge.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "itemq/io.hpp"
#include "itemq/lp_engine.hpp"
#include "itemq/maxent.hpp"
#include "itemq/projection.hpp"
#include "itemq/reduction.hpp"
#include "selftest.hpp"

namespace {

using namespace itemq;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kNegative = 1, kMalformed = 2, kNoConvergence = 3 };

struct Common {
  std::string format = "text";
  int k_limit = kDefaultLpAttributeLimit;
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_k_limit(CLI::App* cmd, Common& common) {
  cmd->add_option("--k-limit", common.k_limit, "Largest number of attributes to accept")
      ->check(CLI::Range(1, kDenseAttributeLimit))
      ->capture_default_str();
}

LpOptions lp_options(const Common& common) {
  if (common.k_limit > kDefaultLpAttributeLimit)
    std::cerr << "warning: exact LP over more than 2^" << kDefaultLpAttributeLimit
              << " states may be very slow\n";
  return LpOptions{common.k_limit};
}

// Emits key/value pairs as "key: value" lines or as one JSON object.
void report(const Common& common, const ordered_json& fields) {
  if (common.json()) {
    std::cout << fields.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : fields.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void require_antimonotonic_verbose(const io::Instance& inst, bool list_all) {
  const auto missing = missing_subsets(inst.family);
  if (missing.empty()) return;
  std::string msg = "family is not antimonotonic; missing subsets:";
  const std::size_t shown = list_all ? missing.size() : 1;
  for (std::size_t i = 0; i < shown; ++i) msg += " {" + io::itemset_names(inst.attributes, missing[i]) + "}";
  if (!list_all && missing.size() > 1)
    msg += " (and " + std::to_string(missing.size() - 1) + " more; use --closure to list all)";
  throw PreconditionViolation(msg);
}

Itemset resolve_query(const io::Instance& inst, const std::optional<std::string>& flag) {
  if (flag) return io::parse_itemset(inst.attributes, *flag);
  if (inst.query) return *inst.query;
  throw MalformedInput("no query: pass --query or add \"query\" to the instance file");
}

std::optional<Rational> resolve_threshold(const io::Instance& inst, const std::optional<std::string>& flag) {
  if (flag) return parse_rational(*flag);
  return inst.threshold;
}

std::string sibling_path(const std::string& prefix, const char* suffix) { return prefix + suffix; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact frequency entailment and MaxEnt estimation over itemsets"};
  app.require_subcommand(1);
  Common common;

  std::string instance_path;
  std::string witness_path;
  std::optional<std::string> query_flag;
  std::optional<std::string> threshold_flag;
  bool closure = false;

  auto* check = app.add_subcommand("check", "Decide whether the frequencies are consistent");
  check->add_option("instance", instance_path, "Instance file")->required();
  check->add_option("--witness", witness_path, "Write a canonical satisfying distribution here");
  check->add_flag("--closure", closure, "List every missing subset of a non-antimonotonic family");
  add_common(check, common);
  add_k_limit(check, common);

  auto* bounds = app.add_subcommand("bounds", "Exact range of consistent query frequencies");
  bounds->add_option("instance", instance_path, "Instance file")->required();
  bounds->add_option("--query", query_flag, "Comma-separated attribute names (default: instance query)");
  bounds->add_option("--threshold", threshold_flag, "Also decide whether the maximum exceeds this");
  bounds->add_option("--witness", witness_path, "Write PREFIX.lo.json and PREFIX.hi.json");
  add_common(bounds, common);
  add_k_limit(bounds, common);

  MaxEntOptions maxent_options;
  int maxent_k_limit = kDenseAttributeLimit;
  auto* maxent = app.add_subcommand("maxent", "Maximum Entropy estimate of the query frequency");
  maxent->add_option("instance", instance_path, "Instance file")->required();
  maxent->add_option("--query", query_flag, "Comma-separated attribute names (default: instance query)");
  maxent->add_option("--threshold", threshold_flag, "Decide whether the estimate exceeds this");
  maxent->add_option("--tol", maxent_options.tolerance, "Constraint residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  maxent->add_option("--max-iter", maxent_options.max_iterations, "Maximum number of sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  maxent->add_option("--k-limit", maxent_k_limit, "Largest number of attributes to accept")
      ->check(CLI::Range(1, kDenseAttributeLimit))
      ->capture_default_str();
  maxent->add_option("--witness", witness_path, "Write the fitted distribution here");
  add_common(maxent, common);

  std::string dimacs_path;
  std::string mode = "max-query";
  std::string output_path;
  auto* reduce = app.add_subcommand("reduce", "Build an instance from a DIMACS CNF formula");
  reduce->add_option("dimacs", dimacs_path, "DIMACS CNF file")->required();
  reduce->add_option("--mode", mode, "Construction")
      ->check(CLI::IsMember({"max-query", "consistent"}))
      ->capture_default_str();
  reduce->add_option("-o,--output", output_path, "Write the instance here instead of stdout");
  int reduce_k_limit = kDenseAttributeLimit;
  reduce->add_option("--k-limit", reduce_k_limit, "Largest number of attributes to accept")
      ->check(CLI::Range(1, kMaxAttributes))
      ->capture_default_str();

  std::string member;
  std::string pattern;
  auto* project_cmd = app.add_subcommand("project", "Exact p(C = t) for a family member C");
  project_cmd->add_option("instance", instance_path, "Instance file")->required();
  project_cmd->add_option("--member", member, "Comma-separated attribute names")->required();
  project_cmd->add_option("--pattern", pattern, "0/1 string, one character per member item")->required();
  add_common(project_cmd, common);

  int rounds = 20;
  auto* selftest = app.add_subcommand("selftest", "Run the cross-check suites against the oracles");
  selftest->add_option("--rounds", rounds, "Random instances per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(selftest, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*check) {
      const auto inst = io::read_instance(instance_path);
      require_antimonotonic_verbose(inst, closure);
      const auto result = check_consistent(inst.family, inst.theta, lp_options(common));
      ordered_json out{{"consistent", result.consistent}};
      if (result.witness) {
        out["support"] = result.witness->support_size();
        if (!witness_path.empty())
          io::write_file(witness_path, io::emit_distribution(*result.witness, inst.attributes));
      }
      report(common, out);
      return result.consistent ? kOk : kNegative;
    }

    if (*bounds) {
      const auto inst = io::read_instance(instance_path);
      require_antimonotonic_verbose(inst, false);
      const Itemset query = resolve_query(inst, query_flag);
      const auto threshold = resolve_threshold(inst, threshold_flag);
      const auto interval = query_bounds(inst.family, inst.theta, query, lp_options(common));
      ordered_json out{{"query", io::itemset_names(inst.attributes, query)},
                       {"lo", to_string(interval.lo)},
                       {"hi", to_string(interval.hi)}};
      if (threshold) {
        out["threshold"] = to_string(*threshold);
        out["exceeds"] = interval.hi > *threshold;
      }
      if (!witness_path.empty()) {
        io::write_file(sibling_path(witness_path, ".lo.json"),
                       io::emit_distribution(interval.lo_witness, inst.attributes));
        io::write_file(sibling_path(witness_path, ".hi.json"),
                       io::emit_distribution(interval.hi_witness, inst.attributes));
      }
      report(common, out);
      return threshold && !(interval.hi > *threshold) ? kNegative : kOk;
    }

    if (*maxent) {
      const auto inst = io::read_instance(instance_path);
      require_antimonotonic_verbose(inst, false);
      const Itemset query = resolve_query(inst, query_flag);
      const auto threshold = resolve_threshold(inst, threshold_flag);
      maxent_options.attribute_limit = maxent_k_limit;
      const auto fit = fit_maxent(inst.family, inst.theta, query, maxent_options);
      ordered_json out{{"query", io::itemset_names(inst.attributes, query)},
                       {"estimate", format_double(fit.query_frequency)},
                       {"entropy", format_double(entropy(fit.distribution))},
                       {"iterations", fit.iterations},
                       {"residual", format_double(fit.residual)},
                       {"converged", fit.converged}};
      Decision decision = Decision::indeterminate;
      if (threshold) {
        decision = decide_entr_query(fit, *threshold, maxent_options.tolerance);
        out["threshold"] = to_string(*threshold);
        out["decision"] = to_string(decision);
      }
      if (!witness_path.empty())
        io::write_file(witness_path, io::emit_distribution(fit.distribution, inst.attributes));
      report(common, out);
      if (!fit.converged) return kNoConvergence;
      return threshold && decision != Decision::yes ? kNegative : kOk;
    }

    if (*reduce) {
      const auto formula = parse_dimacs(io::read_file(dimacs_path));
      const auto instance = mode == "consistent" ? reduce_consistent(formula, reduce_k_limit)
                                                 : reduce_max_query(formula, reduce_k_limit);
      const std::string text = io::emit_instance(io::to_instance(instance));
      if (output_path.empty()) std::cout << text;
      else io::write_file(output_path, text);
      return kOk;
    }

    if (*project_cmd) {
      const auto inst = io::read_instance(instance_path);
      const Itemset c = io::parse_itemset(inst.attributes, member);
      if (!inst.family.contains(c))
        throw UnknownItemset("{" + member + "} is not a family member, so p(C = t) is not determined; "
                             "use 'bounds' to get its range");
      require_antimonotonic_verbose(inst, false);
      const auto p = project(inst.family, inst.theta, c, BinaryVector::parse(pattern));
      ordered_json out{{"value", to_string(p.value)}};
      if (!p.in_unit_interval) {
        out["in_unit_interval"] = false;
        std::cerr << "warning: value outside [0, 1]; the frequencies are inconsistent\n";
      }
      report(common, out);
      return kOk;
    }

    if (*selftest) return itemq::tools::run_selftest(std::cout, rounds, common.json()) ? kOk : kNegative;
  } catch (const InconsistentFrequencies& e) {
    std::cerr << "inconsistent: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
