#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigstack {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/// Runs the `sigstack` command line. `args` excludes the program name.
/// `unicode` enables check-mark glyphs in plain classify output (the tool
/// passes whether stdout is a terminal).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool unicode = false);

}  // namespace sigstack
