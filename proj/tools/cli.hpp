#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wbt::cli {

enum ExitCode : int {
    kPass = 0,
    kFail = 1,
    kUsage = 2,
    kResource = 3,
};

/// Runs the wbt command line. JSON goes to `out` (or --out PATH), the human summary to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace wbt::cli
