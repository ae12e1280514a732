#pragma once

#include <iosfwd>

namespace oscint {

// Exit codes of the oscint command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  // at least one verification row failed
inline constexpr int exit_usage = 2;    // bad flags, unknown id, invalid parameter

// oscint {list|eval|verify|fourier|plot-data} ...
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oscint
