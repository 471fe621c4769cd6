#include "commands.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "aodvsim/net/scenario.h"
#include "aodvsim/simulation.h"
#include "aodvsim/trace/stats.h"
#include "aodvsim/trace/writer.h"

namespace aodvsim::cli {

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  ScenarioConfig scenario;
  try {
    scenario = load_scenario(opts.scenario);
  } catch (const ScenarioError& e) {
    err << opts.scenario << ":" << e.line() << ": " << e.what() << "\n";
    return kScenarioError;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kIoError;
  }

  scenario.seed = opts.seed;
  if (opts.hello) scenario.aodv.hello_enabled = *opts.hello;
  if (opts.lld) scenario.aodv.link_layer_detection = *opts.lld;
  try {
    if (opts.stop) {
      scenario.stop = seconds(*opts.stop);
      // A shorter run cuts flows off with it.
      for (auto& f : scenario.flows) {
        f.stop = std::min(f.stop, scenario.stop);
        f.start = std::min(f.start, f.stop);
      }
    }
    scenario.validate();
  } catch (const std::exception& e) {
    err << "invalid run options: " << e.what() << "\n";
    return kScenarioError;
  }

  std::ofstream file(opts.trace_out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "cannot open " << opts.trace_out << " for writing\n";
    return kIoError;
  }
  try {
    Simulation sim(std::move(scenario), &file);
    sim.run();
    out << "wrote " << sim.records().size() << " records to " << opts.trace_out << "\n";
  } catch (const trace::WriteError& e) {
    err << "write failed: " << e.what() << "\n";
    return kIoError;
  }
  file.close();
  if (!file) {
    err << "write failed: " << opts.trace_out << "\n";
    return kIoError;
  }
  return kOk;
}

int cmd_stats(const std::string& trace_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(trace_path, std::ios::binary);
  if (!in) {
    err << "cannot open " << trace_path << "\n";
    return kIoError;
  }
  trace::StatsReport report;
  try {
    report = trace::compute_stats(in);
  } catch (const trace::StatsInputError& e) {
    err << trace_path << ":" << e.line() << ": " << e.what() << "\n";
    return kTraceError;
  }
  trace::print_table(report, out);
  out << "\n";
  trace::print_key_values(report, out);
  return kOk;
}

}  // namespace aodvsim::cli
