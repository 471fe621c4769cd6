#ifndef AODVSIM_AODV_BROADCAST_ID_CACHE_H
#define AODVSIM_AODV_BROADCAST_ID_CACHE_H

#include <cstdint>
#include <map>
#include <utility>

#include "aodvsim/aodv/packet.h"
#include "aodvsim/kernel/time.h"

namespace aodvsim {

/// Recently seen (originator, broadcast id) pairs, used to suppress
/// duplicate route requests.
class BroadcastIdCache {
 public:
  /// Caches (src, bid) until expire. Re-inserting refreshes the expiry.
  void insert(NodeId src, std::uint32_t bid, Time expire);

  /// True iff (src, bid) is cached with expire > now.
  bool lookup(NodeId src, std::uint32_t bid, Time now) const;

  /// Removes entries with expire <= now; returns how many.
  std::size_t purge(Time now);

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<NodeId, std::uint32_t>, Time> entries_;
};

}  // namespace aodvsim

#endif  // AODVSIM_AODV_BROADCAST_ID_CACHE_H
