#include "aodvsim/aodv/neighbor_table.h"

namespace aodvsim {

void NeighborTable::insert(NodeId id, Time expire) { entries_[id] = expire; }

std::optional<Neighbor> NeighborTable::lookup(NodeId id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return Neighbor{it->first, it->second};
}

bool NeighborTable::remove(NodeId id) { return entries_.erase(id) > 0; }

std::vector<NodeId> NeighborTable::expired(Time now) const {
  std::vector<NodeId> out;
  for (const auto& [id, expire] : entries_) {
    if (expire <= now) out.push_back(id);
  }
  return out;
}

}  // namespace aodvsim
