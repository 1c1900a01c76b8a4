#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posslog::cli {

// Exit codes: 0 entailed/valid/success, 1 not entailed/invalid,
// 2 usage or input error, 3 resource bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posslog::cli
