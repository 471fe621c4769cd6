#ifndef AODVSIM_AODV_NEIGHBOR_TABLE_H
#define AODVSIM_AODV_NEIGHBOR_TABLE_H

#include <map>
#include <optional>
#include <vector>

#include "aodvsim/aodv/packet.h"
#include "aodvsim/kernel/time.h"

namespace aodvsim {

struct Neighbor {
  NodeId id = kNoNode;
  Time expire;

  bool operator==(const Neighbor&) const = default;
};

/// HELLO-maintained neighbor set.
class NeighborTable {
 public:
  /// Inserts a new neighbor or refreshes the expiry of an existing one.
  void insert(NodeId id, Time expire);

  std::optional<Neighbor> lookup(NodeId id) const;

  /// Returns true if the neighbor was present.
  bool remove(NodeId id);

  /// Ids of neighbors with expire <= now, in ascending order. The entries
  /// are not removed; the owning agent deletes them one by one.
  std::vector<NodeId> expired(Time now) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<NodeId, Time> entries_;
};

}  // namespace aodvsim

#endif  // AODVSIM_AODV_NEIGHBOR_TABLE_H
