#pragma once

#include <iosfwd>

namespace wss {

/// Exit codes: 0 all consistent, 1 inconsistency found, 2 usage or parse
/// error, 3 a size cap was exceeded.
enum ExitCode : int { kExitOk = 0, kExitInconsistent = 1, kExitUsage = 2, kExitCap = 3 };

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wss
