#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beatty {

// Runs one CLI command.  Exit code 0: criterion holds / verification passed;
// 1: criterion fails / anomalies found (JSON carries the witnesses);
// 2: usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beatty
