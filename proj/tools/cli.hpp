#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtexp::cli {

enum ExitCode : int {
    kOk = 0,
    kResidualFailure = 1,
    kBadInput = 2,
    kNotInClass = 3,
};

/// Largest residual `verify` accepts.
inline constexpr double kVerifyTol = 1e-10;

/// Run one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qtexp::cli
