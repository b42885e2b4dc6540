#pragma once

#include <ostream>

namespace legfront::cli {

// Exit codes: 0 success (including negative verdicts), 1 domain or I/O
// error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace legfront::cli
