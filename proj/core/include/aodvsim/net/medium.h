#ifndef AODVSIM_NET_MEDIUM_H
#define AODVSIM_NET_MEDIUM_H

#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "aodvsim/aodv/packet.h"
#include "aodvsim/kernel/scheduler.h"
#include "aodvsim/net/mobility.h"

namespace aodvsim {

/// Unit-disk wireless channel with a fixed per-hop delay.
///
/// Two nodes can hear each other when their distance is at most `range`
/// and the link has not been blocked explicitly. Unicast transmissions to
/// an unreachable next hop are retried; when link-layer detection is on,
/// the sender is told about the failure after the last retry.
class Medium {
 public:
  struct Params {
    double range = 250.0;
    Time per_hop_delay = seconds(0.002);
    bool link_layer_detection = true;
    int retries = 3;
    Time retry_spacing = seconds(0.03);
  };

  enum class UnicastOutcome { Scheduled, Retrying, Lost };

  /// Invoked at delivery time with the receiver and the received copy.
  using DeliverFn = std::function<void(NodeId to, const Packet& pkt)>;
  /// Invoked at the sender when link-layer detection gives up.
  using FailFn = std::function<void(NodeId from, const Packet& pkt)>;

  Medium(Scheduler& scheduler, const Mobility& mobility, Params params);

  void set_handlers(DeliverFn deliver, FailFn fail);

  /// Pure geometry: distance <= range (inclusive).
  bool in_range(NodeId a, NodeId b, Time t) const;
  /// in_range and not blocked.
  bool link_up(NodeId a, NodeId b, Time t) const;

  void set_link_blocked(NodeId a, NodeId b, bool blocked);

  /// Schedules a copy for every node in range of `from` at now() and
  /// returns the receivers in ascending id order.
  std::vector<NodeId> broadcast_deliver(const Packet& pkt, NodeId from);

  UnicastOutcome unicast_deliver(const Packet& pkt, NodeId from, NodeId to);

  const Params& params() const { return params_; }
  std::size_t node_count() const { return mobility_->node_count(); }

 private:
  void attempt(Packet pkt, NodeId from, NodeId to, int attempt);
  void schedule_delivery(const Packet& pkt, NodeId from, NodeId to);

  Scheduler* scheduler_;
  const Mobility* mobility_;
  Params params_;
  DeliverFn deliver_;
  FailFn fail_;
  std::set<std::pair<NodeId, NodeId>> blocked_;
};

}  // namespace aodvsim

#endif  // AODVSIM_NET_MEDIUM_H
