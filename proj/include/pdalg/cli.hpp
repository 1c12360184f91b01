#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "pdalg/io_json.hpp"
#include "pdalg/sampling.hpp"

namespace pdalg {

/// One batch command. `command` is the space-joined subcommand path, e.g.
/// "verify", "canonical transform", "onedim classify" or "report".
struct CommandSpec {
  std::string command;
  std::string input;  // file path for verify, canonical and report
  SamplePlan plan;
  ReportFormat format = ReportFormat::text;
  /// Command parameters: a, b, c, map, N, V.
  std::map<std::string, std::string> params;
  /// When set, the structure or constants produced go to this file instead of stdout.
  std::string emit;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int violation = 1;
constexpr int input_error = 2;
}  // namespace exit_code

struct CommandResult {
  int status = exit_code::ok;
  std::string output;
  std::string error;
};

CommandResult run(const CommandSpec& spec);

/// Parses argv into a CommandSpec, runs it and writes its output.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdalg
