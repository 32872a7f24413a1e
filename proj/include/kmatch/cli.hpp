#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmatch::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kResourceGuard = 3 };

/// Runs one command line (without the program name). `in` serves input "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kmatch::cli
