#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carpet::cli {

// Exit codes: 0 success, 1 verification failure, 2 bad input,
// 3 indeterminate (interval result under --exact, or no rule applies).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carpet::cli
