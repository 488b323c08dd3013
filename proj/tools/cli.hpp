#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wg::cli {

/// Exit codes: 0 success, 1 a check failed (the report is still written),
/// 2 usage, parse or I/O error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace wg::cli
