#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kpg::cli {

enum class ExitCode : int {
    Decided = 0,           // a verdict or value was produced, or a verification passed
    VerificationFailed = 1, // claim refuted, certificate invalid, or a domain error
    Usage = 2,
};

/// Runs one command line (without the program name). Normal output goes to
/// out, diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kpg::cli
