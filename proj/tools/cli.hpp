#pragma once

#include <iosfwd>

namespace hecke {

// Exit codes: 0 success, 1 a verification check failed, 2 bad usage or parameters.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hecke
