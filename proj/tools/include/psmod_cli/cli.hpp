#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace psmod::cli {

using json = nlohmann::json;

/// Exit codes shared by every subcommand.
enum Exit : int { kVerified = 0, kRefuted = 1, kUnknown = 2, kUsage = 3 };

/// Subcommands in the order they are listed by --help.
const std::vector<std::string>& command_names();

/// Runs one subcommand on string/bool arguments and returns its JSON report.
/// Every report carries "schema": 1, "command" and "status"
/// (verified | found | refuted | not_refinable | unknown). Library errors
/// propagate as psmod::Error.
json run_command(const std::string& command, const json& args);

/// The paper-suite subcommand: replays the pinned checks of the fixture file.
json run_suite(const json& args);

/// Fixture directory: args["fixtures"], else $PSMOD_FIXTURE_DIR, else the
/// directory configured at build time.
std::string fixture_dir(const json& args);

int exit_code(const json& report);
/// Error report for a failed command, with the exit code it maps to.
json error_report(const std::string& command, const std::exception& e, int* code);
/// Indented key/value rendering of a report.
std::string render_human(const json& report);

int run_main(int argc, char** argv);

}  // namespace psmod::cli
