#ifndef AODVSIM_TESTS_FIXTURES_H
#define AODVSIM_TESTS_FIXTURES_H

#include <string>
#include <vector>

#include "aodvsim/net/scenario.h"
#include "aodvsim/simulation.h"
#include "aodvsim/trace/record.h"

namespace aodvsim::testing {

/// Four lines from a reference NS-2 AODV trace.
inline const std::vector<std::string>& golden_lines() {
  static const std::vector<std::string> lines = {
      "s 0.000000000 _0_ RTR  --- 0 AODV 44 [0 0 0 0] ------- [0:255 -1:255 1 0] "
      "[0x1 1 [0 2] 4.000000] (HELLO)",
      "s 10.000000000 _0_ RTR  --- 0 AODV 48 [0 0 0 0] ------- [0:255 -1:255 30 0] "
      "[0x2 1 1 [1 0] [0 4]] (REQUEST)",
      "s 21.500000000 _0_ RTR  --- 0 AODV 48 [0 0 0 0] ------- [0:255 -1:255 30 0] "
      "[0x2 1 4 [1 0] [0 12]] (REQUEST)",
      "r 21.501260809 _2_ RTR  --- 0 AODV 48 [0 ffffffff 0 800] ------- [0:255 -1:255 30 0] "
      "[0x2 1 4 [1 0] [0 12]] (REQUEST)",
  };
  return lines;
}

/// Nodes on the x axis at 0, spacing, 2*spacing, ... with no traffic.
inline ScenarioConfig line_scenario(std::uint32_t n, double spacing, double stop_s) {
  ScenarioConfig s;
  s.nn = n;
  s.field_x = spacing * (n == 0 ? 1 : n) + 1.0;
  s.field_y = 500.0;
  s.stop = seconds(stop_s);
  for (std::uint32_t i = 0; i < n; ++i) s.positions.push_back({spacing * i, 0.0});
  return s;
}

inline FlowSpec cbr(NodeId src, NodeId dst, double rate, double start_s, double stop_s) {
  FlowSpec f;
  f.src = src;
  f.dst = dst;
  f.rate = rate;
  f.start = seconds(start_s);
  f.stop = seconds(stop_s);
  return f;
}

inline std::string scenario_path(const std::string& name) {
  return std::string(AODVSIM_SCENARIO_DIR) + "/" + name;
}

/// Follows next hops of every UP route. Returns an empty string when each
/// walk reaches its destination without revisiting a node, otherwise a
/// description of the first bad walk.
inline std::string check_loop_free(Simulation& sim) {
  const auto n = static_cast<NodeId>(sim.node_count());
  for (NodeId start = 0; start < n; ++start) {
    for (const auto& [dst, rt] : sim.agent(start).routes()) {
      if (rt.flag != RouteFlag::Up) continue;
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      NodeId at = start;
      while (at != dst) {
        if (seen[static_cast<std::size_t>(at)]) {
          return "loop toward " + std::to_string(dst) + " from " + std::to_string(start);
        }
        seen[static_cast<std::size_t>(at)] = true;
        const RouteEntry* hop = sim.agent(at).routes().lookup(dst);
        // A walk may end at a node whose route already went away; that is a
        // dead end, not a loop.
        if (hop == nullptr || hop->flag != RouteFlag::Up) break;
        if (hop->nexthop < 0 || hop->nexthop >= n) {
          return "bad next hop at " + std::to_string(at);
        }
        at = hop->nexthop;
      }
    }
  }
  return {};
}

}  // namespace aodvsim::testing

#endif  // AODVSIM_TESTS_FIXTURES_H
