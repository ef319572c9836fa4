#pragma once

#include <ostream>

namespace grpverify::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grpverify::cli
