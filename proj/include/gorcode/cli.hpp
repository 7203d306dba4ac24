#pragma once

#include <string>
#include <vector>

namespace gorcode {

/// Runs the command-line front end. Exit codes: for `analyze`, 0/1/2 mirror
/// the Gorenstein verdict (yes / no / inapplicable); other commands return
/// 0 on success. File and format problems return 3, internal inconsistencies
/// 4, and command-line usage errors follow CLI11's conventions (> 2).
int run_cli(const std::vector<std::string>& args);

} // namespace gorcode
