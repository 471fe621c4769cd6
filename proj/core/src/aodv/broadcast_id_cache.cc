#include "aodvsim/aodv/broadcast_id_cache.h"

#include <iterator>

namespace aodvsim {

void BroadcastIdCache::insert(NodeId src, std::uint32_t bid, Time expire) {
  entries_[{src, bid}] = expire;
}

bool BroadcastIdCache::lookup(NodeId src, std::uint32_t bid, Time now) const {
  auto it = entries_.find({src, bid});
  return it != entries_.end() && it->second > now;
}

std::size_t BroadcastIdCache::purge(Time now) {
  return std::erase_if(entries_, [now](const auto& kv) { return kv.second <= now; });
}

}  // namespace aodvsim
