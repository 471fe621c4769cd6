#ifndef AODVSIM_TOOLS_COMMANDS_H
#define AODVSIM_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace aodvsim::cli {

enum ExitCode : int {
  kOk = 0,
  kScenarioError = 2,
  kTraceError = 3,
  kIoError = 4,
};

struct RunOptions {
  std::string scenario;
  std::string trace_out;
  std::uint64_t seed = 0;
  std::optional<bool> hello;
  std::optional<bool> lld;
  std::optional<double> stop;
};

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

/// Prints the table followed by the key=value block.
int cmd_stats(const std::string& trace_path, std::ostream& out, std::ostream& err);

}  // namespace aodvsim::cli

#endif  // AODVSIM_TOOLS_COMMANDS_H
