#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dbx {

// Runs the full command-line tool on args (program name excluded). Exit codes:
// 0 success, 1 semantic negative (nothing found / verification failed /
// transform conditions unmet), 2 usage or input errors, 3 internal limits
// (branch budget, divergence, unexpected failures).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dbx
