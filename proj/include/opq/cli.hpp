#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opq::cli {

/// Runs one command line (without the program name).  Data goes to `out`,
/// diagnostics to `err`.  Returns 0 on success, 1 when a verification report
/// has failures, 2 on flag or parameter errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace opq::cli
