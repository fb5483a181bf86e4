#pragma once

#include <string>
#include <vector>

namespace ordlen::cli {

/// Outcome of one CLI invocation: process exit code plus captured streams.
struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

/// Runs the command line given by args (without the program name).
/// The `input` string stands in for stdin; only the poset subcommand
/// reads it. Exit codes: 0 success, 1 domain error, 2 parse error.
RunResult run(const std::vector<std::string>& args, const std::string& input = {});

} // namespace ordlen::cli
