#pragma once

#include <iosfwd>

namespace ngsocx {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitConfig = 2,
    kExitIo = 3,
    kExitInternal = 4,
};

/// Entry point of the `ngsocx` tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ngsocx
