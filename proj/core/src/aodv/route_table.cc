#include "aodvsim/aodv/route_table.h"

namespace aodvsim {

std::string_view to_string(RouteFlag flag) {
  switch (flag) {
    case RouteFlag::Up:
      return "UP";
    case RouteFlag::Down:
      return "DOWN";
    case RouteFlag::Repair:
      return "REPAIR";
  }
  return "?";
}

RouteEntry& RoutingTable::add(NodeId dst) {
  auto [it, inserted] = entries_.try_emplace(dst);
  if (inserted) it->second.dst = dst;
  return it->second;
}

RouteEntry* RoutingTable::lookup(NodeId dst) {
  auto it = entries_.find(dst);
  return it == entries_.end() ? nullptr : &it->second;
}

const RouteEntry* RoutingTable::lookup(NodeId dst) const {
  auto it = entries_.find(dst);
  return it == entries_.end() ? nullptr : &it->second;
}

void RoutingTable::update(RouteEntry& rt, SeqNo seqno, std::uint16_t hops, NodeId nexthop,
                          Time expire) {
  const RouteFlag before = rt.flag;
  rt.seqno = seqno;
  rt.hops = hops;
  rt.nexthop = nexthop;
  rt.expire = expire;
  rt.flag = RouteFlag::Up;
  if (before != RouteFlag::Up) notify(rt.dst, before, RouteFlag::Up);
}

bool RoutingTable::down(RouteEntry& rt, Time expire) {
  if (rt.flag == RouteFlag::Down) return false;
  const RouteFlag before = rt.flag;
  rt.flag = RouteFlag::Down;
  rt.seqno += 1;
  rt.nexthop = kNoNode;
  rt.hops = kInfiniteHops;
  rt.expire = expire;
  notify(rt.dst, before, RouteFlag::Down);
  return true;
}

bool RoutingTable::mark_repair(RouteEntry& rt) {
  if (rt.flag != RouteFlag::Up) return false;
  rt.flag = RouteFlag::Repair;
  notify(rt.dst, RouteFlag::Up, RouteFlag::Repair);
  return true;
}

void RoutingTable::remove(NodeId dst) { entries_.erase(dst); }

void RoutingTable::notify(NodeId dst, RouteFlag from, RouteFlag to) const {
  if (observer_) observer_(dst, from, to);
}

}  // namespace aodvsim
