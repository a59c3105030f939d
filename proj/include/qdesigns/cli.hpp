#pragma once

#include <iosfwd>

namespace qdesigns {

/// Exit codes: 0 pass / success, 1 verification failed, 2 input or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qdesigns
