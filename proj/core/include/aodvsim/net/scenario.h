#ifndef AODVSIM_NET_SCENARIO_H
#define AODVSIM_NET_SCENARIO_H

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aodvsim/aodv/config.h"
#include "aodvsim/aodv/packet.h"
#include "aodvsim/kernel/time.h"

namespace aodvsim {

struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

/// "at time T, node N moves straight to dest at speed m/s"
struct MotionEvent {
  Time at;
  NodeId node = 0;
  Position dest;
  double speed = 1.0;
};

/// Constant-bit-rate flow.
struct FlowSpec {
  NodeId src = 0;
  NodeId dst = 0;
  double rate = 1.0;  // packets per second
  std::uint32_t payload = 512;
  Time start;
  Time stop;
};

struct ScenarioConfig {
  std::uint32_t nn = 1;
  double field_x = 500.0;
  double field_y = 500.0;
  Time stop = seconds(150.0);
  double range = 250.0;
  Time per_hop_delay = seconds(0.002);
  std::uint64_t seed = 0;

  std::vector<Position> positions;  // one per node
  std::vector<MotionEvent> motion;
  std::vector<FlowSpec> flows;
  AodvConfig aodv;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// Scenario text error. `line` is 1-based, 0 when not tied to a line.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the sectioned key/value scenario format:
///
///   [options]    nn, x, y, stop, range, per_hop_delay, seed, hello, lld
///   [positions]  <node> <x> <y> [z]
///   [motion]     <time> <node> setdest <x> <y> <speed>
///   [flows]      src=<n> dst=<n> rate=<pkt/s> [size=<bytes>] start=<t> [stop=<t>]
///   [aodv]       protocol constants by name, e.g. HELLO_INTERVAL = 1.0
///
/// '#' starts a comment. Omitted constants keep their defaults.
ScenarioConfig parse_scenario(std::string_view text);

/// Reads and parses a file. Throws std::runtime_error if it cannot be read.
ScenarioConfig load_scenario(const std::filesystem::path& path);

}  // namespace aodvsim

#endif  // AODVSIM_NET_SCENARIO_H
