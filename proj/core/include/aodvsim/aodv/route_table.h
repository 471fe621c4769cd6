#ifndef AODVSIM_AODV_ROUTE_TABLE_H
#define AODVSIM_AODV_ROUTE_TABLE_H

#include <cstdint>
#include <functional>
#include <map>
#include <string_view>

#include "aodvsim/aodv/packet.h"
#include "aodvsim/kernel/time.h"

namespace aodvsim {

enum class RouteFlag : std::uint8_t { Up, Down, Repair };

std::string_view to_string(RouteFlag flag);

inline constexpr std::uint16_t kInfiniteHops = 0xffff;

struct RouteEntry {
  NodeId dst = kNoNode;
  SeqNo seqno = 0;
  std::uint16_t hops = kInfiniteHops;
  NodeId nexthop = kNoNode;
  Time expire;
  RouteFlag flag = RouteFlag::Down;

  // Route request bookkeeping.
  std::uint32_t rreq_count = 0;
  Time rreq_deadline;

  /// Last time a packet from another source was relayed over this route.
  /// Unset (negative) if never.
  Time last_relay = Time::from_ns(-1);

  bool operator==(const RouteEntry&) const = default;
};

/// Per-destination routing state.
///
/// The only flag transitions this table performs are DOWN->UP and REPAIR->UP
/// (update), UP->REPAIR (mark_repair), and UP/REPAIR->DOWN (down).
class RoutingTable {
 public:
  using Observer = std::function<void(NodeId dst, RouteFlag from, RouteFlag to)>;

  /// Lookup-or-create. Fresh entries are DOWN with seqno 0 and infinite hops.
  RouteEntry& add(NodeId dst);

  RouteEntry* lookup(NodeId dst);
  const RouteEntry* lookup(NodeId dst) const;

  /// Overwrites the route fields and marks the entry UP.
  void update(RouteEntry& rt, SeqNo seqno, std::uint16_t hops, NodeId nexthop, Time expire);

  /// Invalidates the route: flag DOWN, seqno + 1, nexthop cleared, hops
  /// infinite, expiry set. Returns false (and changes nothing) if the
  /// route was already DOWN.
  bool down(RouteEntry& rt, Time expire);

  /// UP -> REPAIR. Returns false if the route was not UP.
  bool mark_repair(RouteEntry& rt);

  void remove(NodeId dst);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Called on every flag change.
  void set_observer(Observer observer) { observer_ = std::move(observer); }

 private:
  void notify(NodeId dst, RouteFlag from, RouteFlag to) const;

  std::map<NodeId, RouteEntry> entries_;
  Observer observer_;
};

}  // namespace aodvsim

#endif  // AODVSIM_AODV_ROUTE_TABLE_H
