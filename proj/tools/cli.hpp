#pragma once

#include <iosfwd>

namespace mtc::cli {

// Full command driver behind the mtc binary; streams are injectable so the
// end-to-end tests can run in-process. Returns the process exit code:
// 0 success, 1 usage/parse errors, 2 validation or consistency failures.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtc::cli
