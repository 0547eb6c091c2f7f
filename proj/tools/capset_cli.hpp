#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace capset::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kVerificationFailed = 3;
inline constexpr int kResourceCap = 4;

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace capset::cli
