#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdeg::cli {

/// Exit codes: 0 success, 1 domain failure (infeasible or illegal),
/// 2 usage, parse or capacity error.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdeg::cli
