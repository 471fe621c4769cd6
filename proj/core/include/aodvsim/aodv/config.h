#ifndef AODVSIM_AODV_CONFIG_H
#define AODVSIM_AODV_CONFIG_H

#include <cstdint>

namespace aodvsim {

/// Protocol constants for one AODV agent. All periods are in seconds.
///
/// Values the protocol names without quantifying carry the usual reference
/// defaults; every field can be overridden from a scenario file.
struct AodvConfig {
  bool hello_enabled = false;
  bool link_layer_detection = true;

  double hello_interval = 1.0;
  std::uint32_t allowed_hello_loss = 3;
  double min_hello_interval = 0.75;
  double max_hello_interval = 1.25;

  double bcast_id_save = 6.0;
  double frequency = 0.5;  // route-cache purge period
  std::uint32_t network_diameter = 30;
  std::uint32_t rreq_retries = 3;
  double active_route_timeout = 10.0;
  double my_route_timeout = 10.0;
  double delete_period = 4.5;
  double rev_route_life = 6.0;
  double node_traversal_time = 0.03;
  double max_rreq_timeout = 10.0;

  std::uint32_t rqueue_capacity = 64;
  double rqueue_timeout = 30.0;

  /// Neighbor lifetime granted by a received HELLO:
  /// 1.5 * ALLOWED_HELLO_LOSS * HELLO_INTERVAL.
  double neighbor_lifetime() const { return 1.5 * allowed_hello_loss * hello_interval; }

  /// Lifetime advertised inside HELLO messages.
  double hello_lifetime() const { return (1.0 + allowed_hello_loss) * hello_interval; }

  /// Neighbor purge cadence.
  double neighbor_purge_interval() const { return 1.5 * hello_interval; }

  /// Base wait for a route request before it may be retried.
  double net_traversal_time() const { return 2.0 * node_traversal_time * network_diameter; }

  /// Throws std::invalid_argument on inconsistent values.
  void validate() const;
};

}  // namespace aodvsim

#endif  // AODVSIM_AODV_CONFIG_H
