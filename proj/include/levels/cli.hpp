#pragma once

#include <ostream>

namespace levels::cli {

/// Exit codes: 0 success, 1 a verified relation does not hold, 2 usage or
/// input error, 3 internal error.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInternalError = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace levels::cli
