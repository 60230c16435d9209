#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afflie::cli {

enum ExitCode { Ok = 0, Usage = 2, CrossCheckFailed = 3, Resource = 4 };

// args exclude the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace afflie::cli
