#pragma once

#include <ostream>

namespace itemq::tools {

/// Runs the cross-check suites and prints one line per suite. Returns true
/// when every suite passes.
bool run_selftest(std::ostream& out, int rounds, bool json);

}  // namespace itemq::tools
