#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qschubert {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitConsistency = 3,
    kExitResourceLimit = 4,
};

/// Entry point of the command-line tool. `args` excludes the program name.
/// Results go to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qschubert
