#pragma once

#include <ostream>

namespace grt {

// Exit codes: 0 when every requested check passes, 1 on a failed check (the
// first counterexample is printed), 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grt
