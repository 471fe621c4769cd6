#ifndef AODVSIM_SIMULATION_H
#define AODVSIM_SIMULATION_H

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "aodvsim/aodv/agent.h"
#include "aodvsim/kernel/random.h"
#include "aodvsim/kernel/scheduler.h"
#include "aodvsim/net/medium.h"
#include "aodvsim/net/mobility.h"
#include "aodvsim/net/scenario.h"
#include "aodvsim/trace/record.h"
#include "aodvsim/trace/writer.h"

namespace aodvsim {

/// One complete run: scheduler, channel, mobility, one agent per node and
/// the CBR sources of a scenario.
///
/// Records are kept in memory and, when a sink is given, streamed to it as
/// they are produced. Two simulations built from the same scenario produce
/// identical record sequences.
class Simulation final : public AgentEnvironment {
 public:
  explicit Simulation(ScenarioConfig scenario, std::ostream* sink = nullptr);
  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  /// Runs to the scenario stop time and flushes the sink. Only once.
  void run();
  /// Runs to `t` without terminating, for tests that poke at state midway.
  void run_until(Time t);
  /// Queues `fn` at absolute time `t`.
  void at(Time t, std::function<void()> fn);
  /// Emits one data packet from `src` to `dst` now.
  void originate(NodeId src, NodeId dst, std::uint32_t payload, std::uint32_t flow_seq = 0);

  Agent& agent(NodeId id) { return *agents_.at(static_cast<std::size_t>(id)); }
  std::size_t node_count() const { return agents_.size(); }
  Medium& medium() { return medium_; }
  const Mobility& mobility() const { return mobility_; }
  const ScenarioConfig& scenario() const { return scenario_; }
  const std::vector<trace::TraceRecord>& records() const { return records_; }

  Scheduler& scheduler() override { return scheduler_; }
  RandomSource& random() override { return random_; }
  void trace(const trace::TraceRecord& rec) override;
  void transmit(NodeId from, const Packet& pkt) override;
  void deliver_local(NodeId node, const Packet& pkt) override;

 private:
  void start();
  void emit(std::size_t flow, std::uint64_t k);
  void on_receive(NodeId to, const Packet& pkt);

  ScenarioConfig scenario_;
  Scheduler scheduler_;
  RandomSource random_;
  Mobility mobility_;
  Medium medium_;
  std::vector<std::unique_ptr<Agent>> agents_;
  std::vector<trace::TraceRecord> records_;
  std::optional<trace::TraceWriter> writer_;
  std::uint64_t next_uid_ = 1;
  bool started_ = false;
  bool finished_ = false;
};

}  // namespace aodvsim

#endif  // AODVSIM_SIMULATION_H
