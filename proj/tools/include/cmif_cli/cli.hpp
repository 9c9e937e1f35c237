#pragma once

#include <iosfwd>

namespace cmif::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitBadArguments = 2,
    kExitAmbiguous = 3,
};

/// Entry point of the `cmif` tool, with the streams injectable for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmif::cli
