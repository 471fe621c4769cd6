#include "aodvsim/net/mobility.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aodvsim {

Mobility::Mobility(std::vector<Position> initial, const std::vector<MotionEvent>& events)
    : initial_(std::move(initial)), legs_(initial_.size()) {
  std::vector<MotionEvent> sorted = events;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const MotionEvent& a, const MotionEvent& b) { return a.at < b.at; });
  for (const auto& ev : sorted) {
    if (ev.node < 0 || static_cast<std::size_t>(ev.node) >= initial_.size()) {
      throw std::invalid_argument("motion event for unknown node");
    }
    if (!(ev.speed > 0.0)) throw std::invalid_argument("setdest speed must be positive");
    Leg leg;
    leg.start = ev.at.seconds();
    leg.from = position_at(ev.node, ev.at);
    leg.dest = ev.dest;
    leg.speed = ev.speed;
    leg.length = std::hypot(leg.dest.x - leg.from.x, leg.dest.y - leg.from.y);
    legs_[static_cast<std::size_t>(ev.node)].push_back(leg);
  }
}

Position Mobility::along(const Leg& leg, double t) {
  const double travelled = (t - leg.start) * leg.speed;
  if (travelled >= leg.length) return leg.dest;
  const double f = travelled / leg.length;
  return {leg.from.x + (leg.dest.x - leg.from.x) * f, leg.from.y + (leg.dest.y - leg.from.y) * f};
}

Position Mobility::position_at(NodeId node, Time t) const {
  const auto idx = static_cast<std::size_t>(node);
  const auto& legs = legs_.at(idx);
  const double ts = t.seconds();
  // Last leg that has started by t.
  auto it = std::upper_bound(legs.begin(), legs.end(), ts,
                             [](double v, const Leg& leg) { return v < leg.start; });
  if (it == legs.begin()) return initial_[idx];
  return along(*std::prev(it), ts);
}

double Mobility::distance(NodeId a, NodeId b, Time t) const {
  const auto pa = position_at(a, t);
  const auto pb = position_at(b, t);
  return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

}  // namespace aodvsim
