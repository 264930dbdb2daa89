#ifndef MEXLAB_CLI_HPP
#define MEXLAB_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <mexlab/verify.hpp>

namespace mexlab
{

// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

// exit_ok iff every report passed, else exit_failure.
int verify_exit_code(std::span<const VerifyReport> reports);

// Entry point of the `mexlab` tool. args excludes the program name.
// Results go to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mexlab

#endif
