#include "aodvsim/aodv/request_queue.h"

#include <algorithm>

namespace aodvsim {

std::optional<Packet> RequestQueue::enque(NodeId dst, Packet pkt, Time now) {
  entries_.push_back(Entry{dst, std::move(pkt), now + timeout_});
  if (entries_.size() <= capacity_) return std::nullopt;
  Packet evicted = std::move(entries_.front().pkt);
  entries_.pop_front();
  return evicted;
}

std::optional<Packet> RequestQueue::deque(NodeId dst) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [dst](const Entry& e) { return e.dst == dst; });
  if (it == entries_.end()) return std::nullopt;
  Packet pkt = std::move(it->pkt);
  entries_.erase(it);
  return pkt;
}

bool RequestQueue::find(NodeId dst) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [dst](const Entry& e) { return e.dst == dst; });
}

std::size_t RequestQueue::count(NodeId dst) const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [dst](const Entry& e) { return e.dst == dst; }));
}

std::vector<Packet> RequestQueue::purge_expired(Time now) {
  std::vector<Packet> out;
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->expire <= now) {
      out.push_back(std::move(it->pkt));
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace aodvsim
