#pragma once

#include <iosfwd>
#include <vector>

namespace qms {

/// Batch front end. Subcommands: gen, decompose, solve, rank-range, verify.
/// Exit codes: 0 ok, 1 I/O or schema error, 2 inconsistent system,
/// 3 internal invariant violation. Reports are deterministic JSON.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qms
