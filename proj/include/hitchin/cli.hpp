#pragma once

#include <iosfwd>

namespace hitchin::cli {

/// Entry point of the `hitchin` tool. Exit codes: 0 all checks pass, 1 some
/// check failed, 2 usage error or invalid parameter.
int run(int argc, char** argv);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hitchin::cli
