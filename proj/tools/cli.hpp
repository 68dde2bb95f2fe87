#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fedlogic::cli {

// args excludes the program name. Exit codes: 0 ok, 1 logical failure,
// 2 usage or format error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fedlogic::cli
