#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace kudla::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kOutsideHalfSpace = 3,
    kSingularPoint = 4,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re+imi", "re-imi", "imi", "re"; throws std::invalid_argument.
std::complex<double> parse_complex(const std::string& text);

/// Fixed 15-significant-digit rendering used by every output format.
std::string format_double(double x);

}  // namespace kudla::cli
