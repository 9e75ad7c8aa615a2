#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratknot {

/// Runs one command line (program name excluded). Returns 2 on parse or
/// usage errors, 1 when a mathematical precondition fails or a verification
/// finds a mismatch, 0 otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratknot
