#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  using aodvsim::cli::RunOptions;

  CLI::App app{"AODV ad hoc network simulator"};
  app.require_subcommand(1);

  const std::map<std::string, bool> on_off{{"on", true}, {"off", false}};

  RunOptions run;
  bool hello = false;
  bool lld = true;
  double stop = 0.0;
  auto* run_cmd = app.add_subcommand("run", "Simulate a scenario and write its trace");
  run_cmd->add_option("--scenario", run.scenario, "Scenario file")->required();
  run_cmd->add_option("--trace-out", run.trace_out, "Trace output file")->required();
  run_cmd->add_option("--seed", run.seed, "Random seed")->default_val(0);
  auto* hello_opt = run_cmd->add_option("--hello", hello, "Periodic HELLO messages (on|off)")
                        ->transform(CLI::CheckedTransformer(on_off, CLI::ignore_case));
  auto* lld_opt = run_cmd->add_option("--lld", lld, "Link-layer failure detection (on|off)")
                      ->transform(CLI::CheckedTransformer(on_off, CLI::ignore_case));
  auto* stop_opt = run_cmd->add_option("--stop", stop, "Override stop time in seconds")
                       ->check(CLI::NonNegativeNumber);

  std::string trace_path;
  auto* stats_cmd = app.add_subcommand("stats", "Summarize a trace file");
  stats_cmd->add_option("--trace", trace_path, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage mistakes exit 1.
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (*run_cmd) {
    if (*hello_opt) run.hello = hello;
    if (*lld_opt) run.lld = lld;
    if (*stop_opt) run.stop = stop;
    return aodvsim::cli::cmd_run(run, std::cout, std::cerr);
  }
  return aodvsim::cli::cmd_stats(trace_path, std::cout, std::cerr);
}
