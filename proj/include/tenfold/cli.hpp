#pragma once

#include <ostream>

namespace tenfold {

// Entry point of the tenfold tool. Returns the exit code: 0 success,
// 2 malformed input or usage, 3 non-semisimple, 4 precision cap, 5 internal.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tenfold
