#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsg::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "tsg-report/v1";

/// Runs one command. `args` excludes the program name. The JSON report goes
/// to --out when given, else to `out`; diagnostics go to `err`.
/// Returns 0 when every verdict passes, 1 on a failed verdict, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsg::cli
