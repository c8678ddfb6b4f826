#pragma once

#include <string>
#include <vector>

namespace mub::cli {

// exit codes: 0 all checks pass, 1 verification failure, 2 usage/parse error
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mub::cli
