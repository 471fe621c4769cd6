#ifndef AODVSIM_NET_MOBILITY_H
#define AODVSIM_NET_MOBILITY_H

#include <vector>

#include "aodvsim/net/scenario.h"

namespace aodvsim {

/// Piecewise-linear node motion driven by setdest commands.
///
/// A node is stationary until its first command. Each command starts a
/// straight leg from wherever the node is at that instant toward the
/// destination at the commanded speed; the node stops on arrival. A later
/// command replaces the current leg even if it has not finished.
class Mobility {
 public:
  Mobility(std::vector<Position> initial, const std::vector<MotionEvent>& events);

  Position position_at(NodeId node, Time t) const;
  double distance(NodeId a, NodeId b, Time t) const;

  std::size_t node_count() const { return initial_.size(); }

 private:
  struct Leg {
    double start = 0.0;
    Position from;
    Position dest;
    double speed = 0.0;
    double length = 0.0;
  };

  static Position along(const Leg& leg, double t);

  std::vector<Position> initial_;
  std::vector<std::vector<Leg>> legs_;
};

}  // namespace aodvsim

#endif  // AODVSIM_NET_MOBILITY_H
