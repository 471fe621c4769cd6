#include "aodvsim/aodv/agent.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aodvsim/aodv/packet_trace.h"

namespace aodvsim {

namespace {

constexpr Time kJitterCap = Time::from_ns(10'000'000);  // 10 ms

Time from_micros(std::int64_t us) { return Time::from_ns(us * 1000); }

std::int64_t to_micros(Time t) { return t < Time{} ? 0 : t.ns() / 1000; }

}  // namespace

Agent::Agent(NodeId self, AodvConfig config, AgentEnvironment& env)
    : self_(self),
      cfg_(config),
      env_(&env),
      rqueue_(config.rqueue_capacity, seconds(config.rqueue_timeout)) {
  cfg_.validate();
}

Time Agent::now() const { return env_->scheduler().now(); }

void Agent::arm(TimerKind kind, Time delay, NodeId dst) {
  env_->scheduler().schedule(delay, EventKind::Timer, self_,
                             [this, kind, dst] { handle_timer(kind, dst); });
}

void Agent::start() {
  if (started_) throw std::logic_error("agent already started");
  started_ = true;
  handle_timer(TimerKind::Broadcast);
  if (cfg_.hello_enabled) handle_timer(TimerKind::Hello);
  handle_timer(TimerKind::Neighbor);
  handle_timer(TimerKind::RouteCache);
}

void Agent::handle_timer(TimerKind kind, NodeId dst) {
  switch (kind) {
    case TimerKind::Broadcast:
      id_purge();
      arm(kind, seconds(cfg_.bcast_id_save));
      break;
    case TimerKind::Hello:
      if (!cfg_.hello_enabled) break;
      send_hello();
      arm(kind, seconds(env_->random().uniform(cfg_.min_hello_interval, cfg_.max_hello_interval)));
      break;
    case TimerKind::Neighbor:
      nb_purge();
      arm(kind, seconds(cfg_.neighbor_purge_interval()));
      break;
    case TimerKind::RouteCache:
      rt_purge();
      arm(kind, seconds(cfg_.frequency));
      break;
    case TimerKind::LocalRepair:
      finish_local_repair(dst);
      break;
  }
}

// ---------------------------------------------------------------------------
// Reception

void Agent::recv(Packet pkt) {
  if (pkt.kind == PacketKind::Aodv) {
    pkt.ip.ttl -= 1;
    recv_aodv(std::move(pkt));
    return;
  }
  if (pkt.ip.dst == self_) {
    env_->deliver_local(self_, pkt);
    return;
  }
  if (pkt.ip.src == self_ && pkt.num_forwards == 0) {
    // Originated here: add the IP header.
    pkt.size += kIpHeaderBytes;
    if (!pkt.is_broadcast()) pkt.ip.ttl = static_cast<int>(cfg_.network_diameter);
  } else if (pkt.ip.src == self_) {
    drop(pkt, "LOOP");
    return;
  } else if (--pkt.ip.ttl <= 0) {
    drop(pkt, "TTL");
    return;
  }
  if (pkt.is_broadcast()) {
    forward(nullptr, std::move(pkt), Time{});
  } else {
    rt_resolve(std::move(pkt));
  }
}

void Agent::recv_aodv(Packet pkt) {
  if (std::holds_alternative<RreqHeader>(pkt.aodv)) {
    recv_request(std::move(pkt));
  } else if (const auto* rp = std::get_if<RrepHeader>(&pkt.aodv)) {
    if (rp->is_hello) {
      recv_hello(std::move(pkt));
    } else {
      recv_reply(std::move(pkt));
    }
  } else if (std::holds_alternative<RerrHeader>(pkt.aodv)) {
    recv_error(std::move(pkt));
  } else {
    drop(pkt, "ERR");
  }
}

void Agent::recv_request(Packet pkt) {
  auto& rq = std::get<RreqHeader>(pkt.aodv);
  if (rq.src == self_ || id_lookup(rq.src, rq.bcast_id)) return;
  id_insert(rq.src, rq.bcast_id);

  // Reverse route toward the originator.
  const auto metric = static_cast<std::uint16_t>(rq.hop_count + 1);
  RouteEntry& rev = routes_.add(rq.src);
  const Time rev_expire = std::max(rev.expire, now() + seconds(cfg_.rev_route_life));
  if (rq.src_seqno > rev.seqno || (rq.src_seqno == rev.seqno && metric < rev.hops)) {
    rt_update(rev, rq.src_seqno, metric, pkt.prev_hop, rev_expire);
    flush_queue(rq.src);
  } else if (rev.flag == RouteFlag::Up) {
    rev.expire = rev_expire;
  }

  if (rq.dst == self_) {
    seqno_ = std::max(seqno_, rq.dst_seqno);
    if (seqno_ % 2 != 0) ++seqno_;
    send_reply(rq.src, 1, self_, seqno_, seconds(cfg_.my_route_timeout), rq.timestamp);
    return;
  }

  RouteEntry* rt = routes_.lookup(rq.dst);
  if (rt != nullptr && rt->flag == RouteFlag::Up && rt->seqno >= rq.dst_seqno) {
    send_reply(rq.src, rt->hops + 1u, rq.dst, rt->seqno, rt->expire - now(), rq.timestamp);
    return;
  }

  if (pkt.ip.ttl <= 0) return;
  pkt.ip.src = self_;
  pkt.ip.dst = kBroadcast;
  rq.hop_count += 1;
  if (rt != nullptr) rq.dst_seqno = std::max(rt->seqno, rq.dst_seqno);
  forward(nullptr, std::move(pkt), Time{});
}

void Agent::recv_reply(Packet pkt) {
  auto& rp = std::get<RrepHeader>(pkt.aodv);
  if (rp.rpdst == self_) return;

  RouteEntry& rt = routes_.add(rp.rpdst);
  bool suppress = false;
  if (rp.rpseq > rt.seqno || (rp.rpseq == rt.seqno && rp.hop_count < rt.hops)) {
    rt_update(rt, rp.rpseq, static_cast<std::uint16_t>(rp.hop_count), pkt.prev_hop,
              now() + from_micros(rp.lifetime_us));
    flush_queue(rp.rpdst);
  } else {
    suppress = true;
  }

  if (pkt.ip.dst == self_ || suppress) return;

  RouteEntry* rev = routes_.lookup(pkt.ip.dst);
  if (rev == nullptr || rev->flag != RouteFlag::Up) {
    drop(pkt, "NRTE");
    return;
  }
  rp.hop_count += 1;
  forward(rev, std::move(pkt), Time{});
}

void Agent::recv_error(Packet pkt) {
  const auto& re = std::get<RerrHeader>(pkt.aodv);
  RerrHeader upstream;
  for (const auto& [dst, seq] : re.unreachable) {
    RouteEntry* rt = routes_.lookup(dst);
    if (rt == nullptr || rt->flag != RouteFlag::Up || rt->nexthop != pkt.prev_hop ||
        rt->seqno > seq) {
      continue;
    }
    const bool has_upstream = relayed_recently(*rt);
    rt_down(*rt);
    rt->seqno = std::max(rt->seqno, seq);
    if (has_upstream) upstream.unreachable.emplace_back(dst, rt->seqno);
  }
  if (!upstream.unreachable.empty()) send_error(make_rerr(std::move(upstream)), true);
}

void Agent::recv_hello(Packet pkt) {
  const auto& rp = std::get<RrepHeader>(pkt.aodv);
  nb_insert(rp.rpdst, rp.rpseq);
}

// ---------------------------------------------------------------------------
// Transmission

Packet Agent::make_control(std::uint32_t size, NodeId dst, int ttl) const {
  Packet p;
  p.kind = PacketKind::Aodv;
  p.size = size;
  p.ip = IpHeader{self_, kRoutingPort, dst, kRoutingPort, ttl};
  return p;
}

Packet Agent::make_rerr(RerrHeader header) const {
  Packet p = make_control(rerr_size(header.dest_count()), kBroadcast, 1);
  p.aodv = std::move(header);
  return p;
}

void Agent::send_packet(const Packet& pkt) {
  const auto ev = pkt.num_forwards == 0 ? trace::Event::Send : trace::Event::Forward;
  env_->trace(make_trace_record(ev, now(), self_, trace::Layer::Rtr, pkt));
  env_->transmit(self_, pkt);
}

void Agent::drop(const Packet& pkt, std::string_view reason) {
  env_->trace(make_trace_record(trace::Event::Drop, now(), self_, trace::Layer::Rtr, pkt, reason));
}

void Agent::send_hello() {
  if (!cfg_.hello_enabled) return;
  Packet p = make_control(hello_size(), kBroadcast, 1);
  RrepHeader h;
  h.is_hello = true;
  h.hop_count = 1;
  h.rpdst = self_;
  h.rpseq = seqno_;
  h.lifetime_us = std::llround(cfg_.hello_lifetime() * 1e6);
  h.timestamp = now();
  p.aodv = h;
  p.next_hop = kBroadcast;
  send_packet(p);
}

void Agent::send_request(NodeId dst) {
  if (dst == self_) return;
  RouteEntry& rt = routes_.add(dst);
  if (rt.flag == RouteFlag::Up) return;
  if (rt.rreq_deadline > now()) return;  // previous request still outstanding

  if (rt.rreq_count > cfg_.rreq_retries) {
    rt.rreq_deadline = now() + seconds(cfg_.max_rreq_timeout);
    rt.rreq_count = 0;
    while (auto p = rqueue_.deque(dst)) drop(*p, "NRTE");
    return;
  }

  seqno_ += 2;
  bid_ += 1;

  Packet p = make_control(rreq_size(), kBroadcast, static_cast<int>(cfg_.network_diameter));
  RreqHeader rq;
  rq.hop_count = 0;
  rq.bcast_id = bid_;
  rq.dst = dst;
  // A repairing node asks for something strictly fresher than the route it
  // lost, so upstream nodes holding that same route cannot answer.
  rq.dst_seqno = rt.flag == RouteFlag::Repair ? rt.seqno + 1 : rt.seqno;
  rq.src = self_;
  rq.src_seqno = seqno_;
  rq.timestamp = now();
  p.aodv = rq;
  p.next_hop = kBroadcast;

  rt.rreq_count += 1;
  const double backoff = std::min(
      cfg_.net_traversal_time() * std::ldexp(1.0, static_cast<int>(rt.rreq_count) - 1),
      cfg_.max_rreq_timeout);
  rt.rreq_deadline = now() + seconds(backoff);

  send_packet(p);
}

void Agent::send_reply(NodeId ipdst, std::uint32_t hop_count, NodeId rpdst, SeqNo rpseq,
                       Time lifetime, Time timestamp) {
  Packet p = make_control(rrep_size(), ipdst, static_cast<int>(cfg_.network_diameter));
  RrepHeader h;
  h.hop_count = hop_count;
  h.rpdst = rpdst;
  h.rpseq = rpseq;
  h.lifetime_us = to_micros(lifetime);
  h.timestamp = timestamp;
  p.aodv = h;

  RouteEntry* rt = routes_.lookup(ipdst);
  if (rt == nullptr || rt->flag != RouteFlag::Up) {
    drop(p, "NRTE");
    return;
  }
  forward(rt, std::move(p), Time{});
}

void Agent::send_error(Packet rerr, bool jitter) {
  rerr.ip.ttl = 1;
  rerr.ip.dst = kBroadcast;
  Time delay;
  if (jitter) {
    // Uniform over (0, 10 ms].
    delay = kJitterCap - seconds(env_->random().uniform(0.0, kJitterCap.seconds()));
    if (delay <= Time{}) delay = Time::from_ns(1);
  }
  forward(nullptr, std::move(rerr), delay);
}

void Agent::forward(RouteEntry* rt, Packet pkt, Time delay) {
  if (pkt.ip.ttl <= 0) {
    drop(pkt, "TTL");
    return;
  }
  if (rt != nullptr) {
    pkt.next_hop = rt->nexthop;
    rt->expire = now() + seconds(cfg_.active_route_timeout);
    if (pkt.is_data() && pkt.ip.src != self_) rt->last_relay = now();
  } else {
    pkt.next_hop = kBroadcast;
  }
  if (delay > Time{}) {
    env_->scheduler().schedule(delay, EventKind::Timer, self_,
                               [this, pkt = std::move(pkt)] { send_packet(pkt); });
  } else {
    send_packet(pkt);
  }
}

// ---------------------------------------------------------------------------
// Route management

void Agent::rt_resolve(Packet pkt) {
  const NodeId dst = pkt.ip.dst;
  RouteEntry& rt = routes_.add(dst);
  if (rt.flag == RouteFlag::Up) {
    forward(&rt, std::move(pkt), Time{});
    return;
  }
  if (pkt.ip.src == self_) {
    rq_enque(std::move(pkt));
    send_request(dst);
    return;
  }
  if (rt.flag == RouteFlag::Repair) {
    rq_enque(std::move(pkt));
    return;
  }
  // Relaying with no route: tell upstream, then drop.
  RerrHeader re;
  re.unreachable.emplace_back(dst, rt.seqno + 1);
  send_error(make_rerr(std::move(re)), false);
  drop(pkt, "NRTE");
}

void Agent::rt_update(RouteEntry& rt, SeqNo seqno, std::uint16_t metric, NodeId nexthop,
                      Time expire_time) {
  routes_.update(rt, seqno, metric, nexthop, expire_time);
  rt.rreq_count = 0;
  rt.rreq_deadline = Time{};
}

void Agent::rt_down(RouteEntry& rt) { routes_.down(rt, now() + seconds(cfg_.delete_period)); }

void Agent::local_rt_repair(RouteEntry& rt, Packet pkt) {
  rq_enque(std::move(pkt));
  if (!routes_.mark_repair(rt)) return;  // already repairing
  send_request(rt.dst);
  const Time wait =
      rt.rreq_deadline > now() ? rt.rreq_deadline - now() : seconds(cfg_.net_traversal_time());
  arm(TimerKind::LocalRepair, wait, rt.dst);
}

void Agent::finish_local_repair(NodeId dst) {
  RouteEntry* rt = routes_.lookup(dst);
  if (rt == nullptr || rt->flag != RouteFlag::Repair) return;
  rt_down(*rt);
  while (auto p = rqueue_.deque(dst)) drop(*p, "NRTE");
  RerrHeader re;
  re.unreachable.emplace_back(dst, rt->seqno);
  send_error(make_rerr(std::move(re)), false);
}

void Agent::rt_ll_failed(Packet pkt) {
  const NodeId broken = pkt.next_hop;
  if (pkt.is_broadcast() || broken == kBroadcast) return;
  if (!cfg_.link_layer_detection || !pkt.is_data()) {
    drop(pkt, "CBK");
    return;
  }
  RouteEntry* rt = routes_.lookup(pkt.ip.dst);
  if (rt == nullptr || rt->flag == RouteFlag::Down) {
    drop(pkt, "CBK");
    return;
  }
  if (rt->flag == RouteFlag::Repair) {
    rq_enque(std::move(pkt));
    return;
  }
  if (rt->nexthop != broken) {
    // The route moved on since this packet left; try the new next hop.
    forward(rt, std::move(pkt), Time{});
    return;
  }
  // Repair locally when the break is closer to the destination than to the
  // source.
  if (pkt.num_forwards > rt->hops) {
    local_rt_repair(*rt, std::move(pkt));
    return;
  }
  drop(pkt, "CBK");
  neighbors_.remove(broken);
  handle_link_failure(broken);
}

void Agent::handle_link_failure(NodeId id) {
  RerrHeader re;
  for (auto& [dst, rt] : routes_) {
    if (rt.flag != RouteFlag::Up || rt.nexthop != id) continue;
    rt_down(rt);
    re.unreachable.emplace_back(dst, rt.seqno);
  }
  if (!re.unreachable.empty()) send_error(make_rerr(std::move(re)), false);
}

void Agent::rt_purge() {
  const Time t = now();
  for (const auto& p : rqueue_.purge_expired(t)) drop(p, "TOUT");

  std::vector<NodeId> request;
  std::vector<NodeId> stale;
  for (auto& [dst, rt] : routes_) {
    if (rt.flag == RouteFlag::Up && rt.expire <= t) {
      while (auto p = rqueue_.deque(dst)) drop(*p, "NRTE");
      rt_down(rt);
    } else if (rt.flag == RouteFlag::Up) {
      while (auto p = rqueue_.deque(dst)) forward(&rt, std::move(*p), Time{});
    } else if (rt.flag == RouteFlag::Down) {
      if (rqueue_.find(dst)) {
        request.push_back(dst);
      } else if (rt.expire <= t) {
        stale.push_back(dst);
      }
    }
  }
  for (NodeId dst : request) send_request(dst);
  for (NodeId dst : stale) routes_.remove(dst);
}

void Agent::flush_queue(NodeId dst) {
  RouteEntry* rt = routes_.lookup(dst);
  while (rt != nullptr && rt->flag == RouteFlag::Up) {
    auto p = rqueue_.deque(dst);
    if (!p) break;
    forward(rt, std::move(*p), Time{});
  }
}

bool Agent::relayed_recently(const RouteEntry& rt) const {
  return rt.last_relay >= Time{} &&
         now() - rt.last_relay <= seconds(cfg_.active_route_timeout);
}

// ---------------------------------------------------------------------------
// Neighbors and broadcast ids

void Agent::nb_insert(NodeId id, SeqNo seqno) {
  if (id == self_) return;
  const Time expire = now() + seconds(cfg_.neighbor_lifetime());
  neighbors_.insert(id, expire);

  RouteEntry& rt = routes_.add(id);
  const bool was_up = rt.flag == RouteFlag::Up;
  const bool direct = was_up && rt.nexthop == id && rt.hops == 1;
  rt_update(rt, std::max(rt.seqno, seqno), 1, id, direct ? std::max(rt.expire, expire) : expire);
  if (!was_up) flush_queue(id);
}

void Agent::nb_delete(NodeId id) {
  if (neighbors_.remove(id)) handle_link_failure(id);
}

std::size_t Agent::nb_purge() {
  const auto expired = neighbors_.expired(now());
  for (NodeId id : expired) nb_delete(id);
  return expired.size();
}

void Agent::id_insert(NodeId src, std::uint32_t bid) {
  bid_cache_.insert(src, bid, now() + seconds(cfg_.bcast_id_save));
}

bool Agent::id_lookup(NodeId src, std::uint32_t bid) const {
  return bid_cache_.lookup(src, bid, now());
}

std::size_t Agent::id_purge() { return bid_cache_.purge(now()); }

void Agent::rq_enque(Packet pkt) {
  const NodeId dst = pkt.ip.dst;
  if (auto evicted = rqueue_.enque(dst, std::move(pkt), now())) drop(*evicted, "IFQ");
}

}  // namespace aodvsim
