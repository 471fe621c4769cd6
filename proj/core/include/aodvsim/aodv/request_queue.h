#ifndef AODVSIM_AODV_REQUEST_QUEUE_H
#define AODVSIM_AODV_REQUEST_QUEUE_H

#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

#include "aodvsim/aodv/packet.h"
#include "aodvsim/kernel/time.h"

namespace aodvsim {

/// Send buffer for data packets waiting on route discovery.
///
/// Packets are kept in one arrival-ordered list, so each destination sees
/// FIFO order. The capacity bounds the total across destinations; when it
/// is exceeded the oldest packet overall is evicted.
class RequestQueue {
 public:
  explicit RequestQueue(std::size_t capacity = 64, Time timeout = seconds(30.0))
      : capacity_(capacity), timeout_(timeout) {}

  /// Appends pkt for dst. Returns the evicted packet if capacity overflowed.
  std::optional<Packet> enque(NodeId dst, Packet pkt, Time now);

  /// Removes and returns the oldest packet for dst.
  std::optional<Packet> deque(NodeId dst);

  bool find(NodeId dst) const;
  std::size_t count(NodeId dst) const;

  /// Removes and returns packets whose timeout has passed (expire <= now).
  std::vector<Packet> purge_expired(Time now);

  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }

 private:
  struct Entry {
    NodeId dst;
    Packet pkt;
    Time expire;
  };

  std::size_t capacity_;
  Time timeout_;
  std::deque<Entry> entries_;
};

}  // namespace aodvsim

#endif  // AODVSIM_AODV_REQUEST_QUEUE_H
