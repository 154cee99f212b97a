#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpdea::cli {

// Whole command line minus the program name. Returns the process exit
// code: 0 success, 2 bad input or flags, 3 estimator or scenario
// failure. Split out from main() so tests can drive it in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpdea::cli
