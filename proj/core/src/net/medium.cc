#include "aodvsim/net/medium.h"

#include <algorithm>

namespace aodvsim {

Medium::Medium(Scheduler& scheduler, const Mobility& mobility, Params params)
    : scheduler_(&scheduler), mobility_(&mobility), params_(params) {}

void Medium::set_handlers(DeliverFn deliver, FailFn fail) {
  deliver_ = std::move(deliver);
  fail_ = std::move(fail);
}

bool Medium::in_range(NodeId a, NodeId b, Time t) const {
  return mobility_->distance(a, b, t) <= params_.range;
}

bool Medium::link_up(NodeId a, NodeId b, Time t) const {
  return !blocked_.count(std::minmax(a, b)) && in_range(a, b, t);
}

void Medium::set_link_blocked(NodeId a, NodeId b, bool blocked) {
  if (blocked) {
    blocked_.insert(std::minmax(a, b));
  } else {
    blocked_.erase(std::minmax(a, b));
  }
}

void Medium::schedule_delivery(const Packet& pkt, NodeId from, NodeId to) {
  Packet copy = pkt;
  copy.prev_hop = from;
  copy.num_forwards += 1;
  scheduler_->schedule(params_.per_hop_delay, EventKind::PacketDelivery, to,
                       [this, to, copy = std::move(copy)] {
                         if (deliver_) deliver_(to, copy);
                       });
}

std::vector<NodeId> Medium::broadcast_deliver(const Packet& pkt, NodeId from) {
  std::vector<NodeId> receivers;
  const Time now = scheduler_->now();
  const auto n = static_cast<NodeId>(mobility_->node_count());
  for (NodeId to = 0; to < n; ++to) {
    if (to == from || !link_up(from, to, now)) continue;
    receivers.push_back(to);
    schedule_delivery(pkt, from, to);
  }
  return receivers;
}

Medium::UnicastOutcome Medium::unicast_deliver(const Packet& pkt, NodeId from, NodeId to) {
  if (link_up(from, to, scheduler_->now())) {
    schedule_delivery(pkt, from, to);
    return UnicastOutcome::Scheduled;
  }
  if (!params_.link_layer_detection || params_.retries <= 0) {
    if (params_.link_layer_detection && fail_) fail_(from, pkt);
    return UnicastOutcome::Lost;
  }
  scheduler_->schedule(params_.retry_spacing, EventKind::PacketDelivery, from,
                       [this, pkt, from, to] { attempt(pkt, from, to, 1); });
  return UnicastOutcome::Retrying;
}

void Medium::attempt(Packet pkt, NodeId from, NodeId to, int n) {
  if (link_up(from, to, scheduler_->now())) {
    schedule_delivery(pkt, from, to);
    return;
  }
  if (n >= params_.retries) {
    if (fail_) fail_(from, pkt);
    return;
  }
  scheduler_->schedule(params_.retry_spacing, EventKind::PacketDelivery, from,
                       [this, pkt = std::move(pkt), from, to, n] { attempt(pkt, from, to, n + 1); });
}

}  // namespace aodvsim
