#ifndef SQZ_CLI_COMMANDS_HPP
#define SQZ_CLI_COMMANDS_HPP

#include "sqz/cli/config.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sqz::cli
{
enum class Format
{
    csv,
    json,
};

struct RunOptions
{
    Format format = Format::csv;
    std::optional<std::uint64_t> seed;  // overrides [run] seed
};

struct CommandOutput
{
    std::string text;
    std::vector<std::string> warnings;
};

const std::vector<std::string> &command_names();

// Runs one subcommand on an already parsed config. Parameters are validated
// (and unknown keys rejected) before any computation starts.
CommandOutput run_command(const std::string &name, Config &config, const RunOptions &options);

// Full command-line entry point. Exit codes: 0 success, 1 internal error,
// 2 usage or config error, 3 numeric-domain error. Failures print one line
// on err:
//   sqz: error: exit=<code> kind=<kind> message="<text>"
int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace sqz::cli

#endif // SQZ_CLI_COMMANDS_HPP
