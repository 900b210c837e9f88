#pragma once

#include <iosfwd>

namespace elimkit {

// Full command-line front end; returns the process exit code
// (0 success, 1 verification failure, 2 usage or input error).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace elimkit
