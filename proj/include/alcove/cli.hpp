#pragma once

#include <iosfwd>

namespace alcove {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alcove
