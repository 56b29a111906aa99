#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singedge {

// Runs one toolkit command (argv without the program name). The report goes
// to `out` on success and to `err` on failure. Exit codes: 0 ok, 1 internal
// error, 2 invalid input, 4 result computed but not certified.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singedge
