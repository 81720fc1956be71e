#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pec {

// Command-line surface. Exit codes: 0 success, 1 verification failure,
// 2 bad input or usage.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace pec
