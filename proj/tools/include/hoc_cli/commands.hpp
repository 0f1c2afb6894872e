#pragma once

#include <ostream>

namespace hoc::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Entry point of the `hoc` tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hoc::cli
