#ifndef GERMCALC_CLI_HPP
#define GERMCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace germcalc {

/// Runs one command (args exclude the program name) and writes the report to
/// out, diagnostics and timings to err. Returns the process exit code:
/// 0 success, 1 input error, 2 gate failure, 3 timeout.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace germcalc

#endif
