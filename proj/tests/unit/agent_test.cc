#include <algorithm>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "aodvsim/aodv/agent.h"
#include "aodvsim/trace/format.h"

namespace aodvsim {
namespace {

/// Records everything an agent does to the outside world.
class FakeEnv : public AgentEnvironment {
 public:
  explicit FakeEnv(std::uint64_t seed = 0) : rng(seed) {}

  Scheduler& scheduler() override { return sched; }
  RandomSource& random() override { return rng; }
  void trace(const trace::TraceRecord& rec) override { records.push_back(rec); }
  void transmit(NodeId from, const Packet& pkt) override { sent.push_back({from, pkt, sched.now()}); }
  void deliver_local(NodeId node, const Packet& pkt) override { delivered.push_back({node, pkt}); }

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (const auto& r : records) out.push_back(trace::format_record(r));
    return out;
  }

  std::size_t count(trace::Event ev, std::string_view label_or_reason) const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const auto& r) {
      return r.event == ev && (r.label() == label_or_reason || r.reason == label_or_reason);
    }));
  }

  void advance(Time t) { sched.run_until(t); }

  struct Sent {
    NodeId from;
    Packet pkt;
    Time at;
  };
  struct Delivered {
    NodeId node;
    Packet pkt;
  };

  Scheduler sched;
  RandomSource rng;
  std::vector<trace::TraceRecord> records;
  std::vector<Sent> sent;
  std::vector<Delivered> delivered;
};

Packet rreq(NodeId src, std::uint32_t bid, NodeId dst, SeqNo src_seq, SeqNo dst_seq,
            std::uint32_t hops, NodeId prev, int ttl = 30) {
  Packet p;
  p.kind = PacketKind::Aodv;
  p.size = rreq_size();
  p.ip = IpHeader{prev, kRoutingPort, kBroadcast, kRoutingPort, ttl};
  p.prev_hop = prev;
  p.num_forwards = hops + 1;
  RreqHeader h;
  h.hop_count = hops;
  h.bcast_id = bid;
  h.dst = dst;
  h.dst_seqno = dst_seq;
  h.src = src;
  h.src_seqno = src_seq;
  p.aodv = h;
  return p;
}

Packet rrep(NodeId ipsrc, NodeId ipdst, NodeId rpdst, SeqNo seq, std::uint32_t hops,
            NodeId prev) {
  Packet p;
  p.kind = PacketKind::Aodv;
  p.size = rrep_size();
  p.ip = IpHeader{ipsrc, kRoutingPort, ipdst, kRoutingPort, 30};
  p.prev_hop = prev;
  p.next_hop = 0;
  p.num_forwards = 1;
  RrepHeader h;
  h.hop_count = hops;
  h.rpdst = rpdst;
  h.rpseq = seq;
  h.lifetime_us = 10'000'000;
  p.aodv = h;
  return p;
}

Packet rerr(NodeId from, std::vector<std::pair<NodeId, SeqNo>> list) {
  Packet p;
  p.kind = PacketKind::Aodv;
  p.size = rerr_size(list.size());
  p.ip = IpHeader{from, kRoutingPort, kBroadcast, kRoutingPort, 1};
  p.prev_hop = from;
  p.num_forwards = 1;
  p.aodv = RerrHeader{std::move(list)};
  return p;
}

Packet data(NodeId src, NodeId dst, std::uint64_t uid = 1, std::uint32_t forwards = 0) {
  Packet p;
  p.uid = uid;
  p.size = forwards == 0 ? 512 : 532;
  p.ip = IpHeader{src, kDataPort, dst, kDataPort, forwards == 0 ? kDefaultIpTtl : 30};
  p.num_forwards = forwards;
  return p;
}

class AgentTest : public ::testing::Test {
 protected:
  FakeEnv env;
  AodvConfig cfg;
};

TEST_F(AgentTest, StartTwiceThrows) {
  Agent a(0, cfg, env);
  a.start();
  EXPECT_TRUE(a.started());
  EXPECT_THROW(a.start(), std::logic_error);
}

TEST_F(AgentTest, InitialHelloMatchesReferenceLine) {
  cfg.hello_enabled = true;
  Agent a(0, cfg, env);
  a.start();
  ASSERT_EQ(env.records.size(), 1u);
  EXPECT_EQ(env.lines()[0],
            "s 0.000000000 _0_ RTR  --- 0 AODV 44 [0 0 0 0] ------- [0:255 -1:255 1 0] "
            "[0x1 1 [0 2] 4.000000] (HELLO)");
  EXPECT_EQ(env.sent.at(0).pkt.next_hop, kBroadcast);
}

TEST_F(AgentTest, HelloDisabledSendsNothing) {
  Agent a(0, cfg, env);
  a.start();
  env.advance(seconds(20.0));
  EXPECT_EQ(env.count(trace::Event::Send, "HELLO"), 0u);
  EXPECT_TRUE(env.sent.empty());
}

TEST_F(AgentTest, HelloRearmWithinJitterWindow) {
  cfg.hello_enabled = true;
  Agent a(0, cfg, env);
  a.start();
  env.advance(seconds(500.0));
  ASSERT_GT(env.sent.size(), 300u);
  for (std::size_t i = 1; i < env.sent.size(); ++i) {
    const Time gap = env.sent[i].at - env.sent[i - 1].at;
    ASSERT_GE(gap, seconds(0.75));
    ASSERT_LE(gap, seconds(1.25));
  }
}

TEST_F(AgentTest, TimersArmedOnStart) {
  Agent a(0, cfg, env);
  a.start();
  EXPECT_EQ(env.sched.pending(), 3u);  // broadcast ids, neighbors, route cache
  cfg.hello_enabled = true;
  FakeEnv other;
  Agent b(0, cfg, other);
  b.start();
  EXPECT_EQ(other.sched.pending(), 4u);
}

TEST_F(AgentTest, NeighborTimerCadence) {
  Agent a(0, cfg, env);
  a.start();
  env.advance(seconds(0.1));
  a.nb_insert(5);  // expires at 4.6
  env.advance(seconds(4.49));
  EXPECT_TRUE(a.nb_lookup(5).has_value());
  env.advance(seconds(4.5));  // purge runs at 0, 1.5, 3.0, 4.5
  EXPECT_TRUE(a.nb_lookup(5).has_value());
  env.advance(seconds(6.0));
  EXPECT_FALSE(a.nb_lookup(5).has_value());
}

TEST_F(AgentTest, RouteCacheTimerCadence) {
  Agent a(0, cfg, env);
  a.start();
  RouteEntry& rt = a.routes().add(3);
  a.rt_update(rt, 2, 1, 3, seconds(0.7));
  env.advance(seconds(0.99));
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Up);
  env.advance(seconds(1.0));
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Down);
}

TEST_F(AgentTest, NeighborExpiryFormula) {
  Agent a(1, cfg, env);
  a.nb_insert(0);
  EXPECT_EQ(a.nb_lookup(0)->expire, seconds(4.5));
  env.advance(seconds(21.5));
  a.nb_insert(0);
  EXPECT_EQ(a.nb_lookup(0)->expire, seconds(26.0));
  EXPECT_EQ(a.neighbors().size(), 1u);
}

TEST_F(AgentTest, NeighborDeleteDownsRoutesThroughIt) {
  Agent a(0, cfg, env);
  a.nb_insert(3);
  a.rt_update(a.routes().add(7), 4, 2, 3, seconds(10.0));
  a.nb_delete(3);
  EXPECT_FALSE(a.nb_lookup(3).has_value());
  EXPECT_EQ(a.routes().lookup(7)->flag, RouteFlag::Down);
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Down);
  EXPECT_EQ(env.count(trace::Event::Send, "ERROR"), 1u);

  const auto before = env.records.size();
  a.nb_delete(3);  // absent: no effect
  EXPECT_EQ(env.records.size(), before);
  EXPECT_TRUE(a.neighbors().empty());
}

TEST_F(AgentTest, NeighborPurgeCountsExpired) {
  Agent a(0, cfg, env);
  a.nb_insert(1);
  a.nb_insert(2);
  env.advance(seconds(1.0));
  a.nb_insert(3);
  env.advance(seconds(4.5));
  EXPECT_EQ(a.nb_purge(), 2u);
  EXPECT_TRUE(a.nb_lookup(3).has_value());
}

TEST_F(AgentTest, HelloInstallsOneHopRouteAndIsNotForwarded) {
  Agent a(1, cfg, env);
  Packet h;
  h.kind = PacketKind::Aodv;
  h.size = hello_size();
  h.ip = IpHeader{0, kRoutingPort, kBroadcast, kRoutingPort, 1};
  h.prev_hop = 0;
  h.num_forwards = 1;
  RrepHeader body;
  body.is_hello = true;
  body.hop_count = 1;
  body.rpdst = 0;
  body.rpseq = 2;
  body.lifetime_us = 4'000'000;
  h.aodv = body;
  a.recv(h);
  const RouteEntry* rt = a.routes().lookup(0);
  ASSERT_NE(rt, nullptr);
  EXPECT_EQ(rt->flag, RouteFlag::Up);
  EXPECT_EQ(rt->hops, 1);
  EXPECT_EQ(rt->seqno, 2u);
  EXPECT_TRUE(a.nb_lookup(0).has_value());
  EXPECT_TRUE(env.sent.empty());
}

TEST_F(AgentTest, AodvTtlDecrementedOnReceive) {
  Agent a(1, cfg, env);
  a.recv(rreq(0, 1, 2, 4, 0, 0, 0, 30));
  ASSERT_EQ(env.sent.size(), 1u);
  EXPECT_EQ(env.sent[0].pkt.ip.ttl, 29);
}

TEST_F(AgentTest, IntermediateRebroadcastsAndLearnsReverseRoute) {
  // Line 0-1-2: node 1 hears node 0's request for node 2.
  Agent a(1, cfg, env);
  a.recv(rreq(0, 1, 2, 4, 0, 0, 0));
  const RouteEntry* back = a.routes().lookup(0);
  ASSERT_NE(back, nullptr);
  EXPECT_EQ(back->flag, RouteFlag::Up);
  EXPECT_EQ(back->hops, 1);
  EXPECT_EQ(back->nexthop, 0);
  EXPECT_EQ(back->seqno, 4u);

  ASSERT_EQ(env.sent.size(), 1u);
  const auto& out = env.sent[0].pkt;
  const auto& h = std::get<RreqHeader>(out.aodv);
  EXPECT_EQ(h.hop_count, 1u);
  EXPECT_EQ(out.next_hop, kBroadcast);
  EXPECT_EQ(env.lines().back(),
            "f 0.000000000 _1_ RTR  --- 0 AODV 48 [0 0 0 0] ------- [1:255 -1:255 29 0] "
            "[0x2 2 1 [2 0] [0 4]] (REQUEST)");
}

TEST_F(AgentTest, DuplicateRequestSuppressed) {
  Agent a(1, cfg, env);
  a.recv(rreq(0, 1, 2, 4, 0, 0, 0));
  a.recv(rreq(0, 1, 2, 4, 0, 1, 3));
  EXPECT_EQ(env.sent.size(), 1u);
  a.recv(rreq(0, 2, 2, 6, 0, 0, 0));
  EXPECT_EQ(env.sent.size(), 2u);
}

TEST_F(AgentTest, OwnRequestIgnored) {
  Agent a(0, cfg, env);
  a.recv(rreq(0, 1, 2, 4, 0, 1, 1));
  EXPECT_TRUE(env.sent.empty());
  EXPECT_EQ(a.routes().lookup(0), nullptr);
}

TEST_F(AgentTest, ZeroTtlRequestNotRebroadcast) {
  Agent a(1, cfg, env);
  a.recv(rreq(0, 1, 2, 4, 0, 0, 0, 1));
  EXPECT_TRUE(env.sent.empty());
}

TEST_F(AgentTest, DestinationReplies) {
  Agent a(2, cfg, env);
  a.recv(rreq(0, 1, 2, 4, 0, 1, 1));
  ASSERT_EQ(env.sent.size(), 1u);
  const auto& out = env.sent[0].pkt;
  EXPECT_EQ(out.next_hop, 1);
  EXPECT_EQ(out.ip.dst, 0);
  EXPECT_EQ(out.ip.ttl, 30);
  const auto& h = std::get<RrepHeader>(out.aodv);
  EXPECT_FALSE(h.is_hello);
  EXPECT_EQ(h.hop_count, 1u);
  EXPECT_EQ(h.rpdst, 2);
  EXPECT_EQ(h.rpseq, 2u);
  EXPECT_EQ(h.lifetime_us, 10'000'000);
  EXPECT_EQ(env.lines().back(),
            "s 0.000000000 _2_ RTR  --- 0 AODV 44 [0 0 0 0] ------- [2:255 0:255 30 1] "
            "[0x4 1 [2 2] 10.000000] (REPLY)");
}

TEST_F(AgentTest, DestinationAdoptsRequestedSequenceRoundedEven) {
  Agent a(2, cfg, env);
  a.recv(rreq(0, 1, 2, 4, 7, 1, 1));
  EXPECT_EQ(a.seqno(), 8u);
  EXPECT_EQ(std::get<RrepHeader>(env.sent.at(0).pkt.aodv).rpseq, 8u);
}

TEST_F(AgentTest, IntermediateReplyUsesStoredHops) {
  Agent a(1, cfg, env);
  a.rt_update(a.routes().add(5), 10, 3, 4, seconds(8.0));
  a.recv(rreq(0, 1, 5, 4, 10, 0, 0));
  ASSERT_EQ(env.sent.size(), 1u);
  const auto& h = std::get<RrepHeader>(env.sent[0].pkt.aodv);
  EXPECT_EQ(h.hop_count, 4u);
  EXPECT_EQ(h.rpdst, 5);
  EXPECT_EQ(h.rpseq, 10u);
  EXPECT_EQ(h.lifetime_us, 8'000'000);
}

TEST_F(AgentTest, StaleRouteDoesNotAnswer) {
  Agent a(1, cfg, env);
  a.rt_update(a.routes().add(5), 10, 3, 4, seconds(8.0));
  a.recv(rreq(0, 1, 5, 4, 11, 0, 0));
  ASSERT_EQ(env.sent.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<RreqHeader>(env.sent[0].pkt.aodv));
  EXPECT_EQ(std::get<RreqHeader>(env.sent[0].pkt.aodv).dst_seqno, 11u);
}

TEST_F(AgentTest, ReplyWithoutReverseRouteDropped) {
  Agent a(1, cfg, env);
  a.send_reply(0, 1, 1, 2, seconds(10.0), Time{});
  EXPECT_TRUE(env.sent.empty());
  EXPECT_EQ(env.count(trace::Event::Drop, "NRTE"), 1u);
}

TEST_F(AgentTest, ReplyInstallsForwardRouteAndRelays) {
  Agent a(1, cfg, env);
  a.rt_update(a.routes().add(0), 4, 1, 0, seconds(6.0));
  a.recv(rrep(2, 0, 2, 4, 1, 2));
  const RouteEntry* fwd = a.routes().lookup(2);
  ASSERT_NE(fwd, nullptr);
  EXPECT_EQ(fwd->flag, RouteFlag::Up);
  EXPECT_EQ(fwd->nexthop, 2);
  EXPECT_EQ(fwd->hops, 1);
  EXPECT_EQ(fwd->expire, seconds(10.0));
  ASSERT_EQ(env.sent.size(), 1u);
  EXPECT_EQ(env.sent[0].pkt.next_hop, 0);
  EXPECT_EQ(std::get<RrepHeader>(env.sent[0].pkt.aodv).hop_count, 2u);
}

TEST_F(AgentTest, ReplyFreshnessRules) {
  Agent a(1, cfg, env);
  a.rt_update(a.routes().add(2), 6, 2, 3, seconds(5.0));
  const RouteEntry before = *a.routes().lookup(2);

  a.recv(rrep(2, 1, 2, 4, 1, 2));  // older sequence number
  EXPECT_EQ(*a.routes().lookup(2), before);
  a.recv(rrep(2, 1, 2, 6, 3, 2));  // same sequence number, longer path
  EXPECT_EQ(*a.routes().lookup(2), before);
  a.recv(rrep(2, 1, 2, 6, 1, 2));  // same sequence number, shorter path
  EXPECT_EQ(a.routes().lookup(2)->hops, 1);
  EXPECT_EQ(a.routes().lookup(2)->nexthop, 2);
}

TEST_F(AgentTest, ReplyFlushesBufferedPackets) {
  Agent a(0, cfg, env);
  a.recv(data(0, 2, 1));
  a.recv(data(0, 2, 2));
  EXPECT_EQ(a.rqueue().count(2), 2u);
  a.recv(rrep(2, 0, 2, 4, 2, 1));
  EXPECT_EQ(a.rqueue().size(), 0u);
  std::size_t data_out = 0;
  for (const auto& s : env.sent) {
    if (s.pkt.is_data()) {
      ++data_out;
      EXPECT_EQ(s.pkt.next_hop, 1);
    }
  }
  EXPECT_EQ(data_out, 2u);
}

TEST_F(AgentTest, ErrorDownsRouteWithListedSequence) {
  Agent a(0, cfg, env);
  a.rt_update(a.routes().add(2), 4, 2, 1, seconds(10.0));
  a.recv(rerr(1, {{2, 6}}));
  const RouteEntry* rt = a.routes().lookup(2);
  EXPECT_EQ(rt->flag, RouteFlag::Down);
  EXPECT_EQ(rt->seqno, 6u);
  // The source never relayed for anyone, so nothing propagates.
  EXPECT_EQ(env.count(trace::Event::Send, "ERROR"), 0u);
}

TEST_F(AgentTest, ErrorIgnoredForUnknownOrForeignRoutes) {
  Agent a(0, cfg, env);
  a.rt_update(a.routes().add(2), 4, 2, 1, seconds(10.0));
  a.recv(rerr(1, {{9, 6}}));
  a.recv(rerr(3, {{2, 6}}));
  EXPECT_EQ(a.routes().lookup(2)->flag, RouteFlag::Up);
  EXPECT_EQ(a.routes().lookup(9), nullptr);
}

TEST_F(AgentTest, ErrorPropagatesWhenRelaying) {
  Agent a(1, cfg, env);
  RouteEntry& rt = a.routes().add(3);
  a.rt_update(rt, 4, 2, 2, seconds(10.0));
  a.forward(&rt, data(0, 3, 1, 1), Time{});  // relay for node 0
  a.recv(rerr(2, {{3, 5}}));
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Down);
  env.advance(seconds(0.02));  // jittered
  ASSERT_EQ(env.count(trace::Event::Send, "ERROR"), 1u);
  const auto& out = env.sent.back().pkt;
  EXPECT_EQ(out.ip.ttl, 1);
  EXPECT_EQ(std::get<RerrHeader>(out.aodv).unreachable,
            (std::vector<std::pair<NodeId, SeqNo>>{{3, 5}}));
}

TEST_F(AgentTest, ErrorWithoutJitterLeavesNow) {
  Agent a(0, cfg, env);
  env.advance(seconds(2.0));
  a.send_error(Packet{PacketKind::Aodv, 0, rerr_size(1), {}, kNoNode, kNoNode, 0,
                      RerrHeader{{{4, 3}}}, 0},
               false);
  ASSERT_EQ(env.sent.size(), 1u);
  EXPECT_EQ(env.sent[0].at, seconds(2.0));
}

TEST(AgentJitter, ErrorJitterWithinTenMilliseconds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FakeEnv env(seed);
    Agent a(0, AodvConfig{}, env);
    env.advance(seconds(1.0));
    a.send_error(Packet{PacketKind::Aodv, 0, rerr_size(1), {}, kNoNode, kNoNode, 0,
                        RerrHeader{{{4, 3}}}, 0},
                 true);
    EXPECT_TRUE(env.sent.empty());
    env.advance(seconds(1.02));
    ASSERT_EQ(env.sent.size(), 1u);
    EXPECT_GT(env.sent[0].at, seconds(1.0));
    EXPECT_LE(env.sent[0].at, seconds(1.01));
  }
}

TEST_F(AgentTest, LinkFailureAggregatesDestinations) {
  Agent a(0, cfg, env);
  a.nb_insert(1);
  a.rt_update(a.routes().add(2), 4, 2, 1, seconds(10.0));
  a.rt_update(a.routes().add(3), 6, 3, 1, seconds(10.0));
  a.rt_update(a.routes().add(4), 2, 1, 4, seconds(10.0));
  a.handle_link_failure(1);
  ASSERT_EQ(env.sent.size(), 1u);
  const auto& out = env.sent[0].pkt;
  const auto& list = std::get<RerrHeader>(out.aodv).unreachable;
  EXPECT_EQ(list.size(), 3u);  // 1 itself, 2 and 3
  EXPECT_EQ(out.size, rerr_size(3));
  EXPECT_EQ(a.routes().lookup(1)->flag, RouteFlag::Down);
  EXPECT_EQ(a.routes().lookup(4)->flag, RouteFlag::Up);
}

TEST_F(AgentTest, LinkFailureWithNoDependentsIsQuiet) {
  Agent a(0, cfg, env);
  a.rt_update(a.routes().add(4), 2, 1, 4, seconds(10.0));
  a.handle_link_failure(9);
  EXPECT_TRUE(env.sent.empty());
  EXPECT_TRUE(env.records.empty());
}

TEST_F(AgentTest, OwnDataWithoutRouteStartsDiscovery) {
  Agent a(0, cfg, env);
  env.advance(seconds(10.0));
  a.recv(data(0, 1));
  EXPECT_EQ(a.rqueue().count(1), 1u);
  ASSERT_EQ(env.records.size(), 1u);
  EXPECT_EQ(env.lines()[0],
            "s 10.000000000 _0_ RTR  --- 0 AODV 48 [0 0 0 0] ------- [0:255 -1:255 30 0] "
            "[0x2 1 1 [1 0] [0 4]] (REQUEST)");
}

TEST_F(AgentTest, RequestRetriesBackOffThenGiveUp) {
  Agent a(0, cfg, env);
  a.recv(data(0, 1, 1));
  EXPECT_EQ(a.routes().lookup(1)->rreq_deadline, seconds(1.8));
  a.send_request(1);  // outstanding: suppressed
  EXPECT_EQ(a.bcast_id(), 1u);

  const std::vector<double> deadlines = {1.8, 1.8 + 3.6, 1.8 + 3.6 + 7.2, 1.8 + 3.6 + 7.2 + 10.0};
  for (std::size_t i = 1; i < deadlines.size(); ++i) {
    env.advance(seconds(deadlines[i - 1]));
    a.send_request(1);
    EXPECT_EQ(a.routes().lookup(1)->rreq_deadline, seconds(deadlines[i]));
  }
  EXPECT_EQ(a.bcast_id(), 4u);
  EXPECT_EQ(a.seqno(), 10u);
  const auto& last = std::get<RreqHeader>(env.sent.back().pkt.aodv);
  EXPECT_EQ(last.bcast_id, 4u);
  EXPECT_EQ(env.sent.back().pkt.ip.ttl, 30);

  env.advance(seconds(deadlines.back()));
  a.send_request(1);
  EXPECT_EQ(a.bcast_id(), 4u);
  EXPECT_EQ(env.count(trace::Event::Drop, "NRTE"), 1u);
  EXPECT_EQ(a.rqueue().size(), 0u);
  EXPECT_EQ(a.routes().lookup(1)->rreq_deadline, seconds(deadlines.back() + 10.0));
}

TEST_F(AgentTest, DataForSelfDelivered) {
  Agent a(2, cfg, env);
  a.recv(data(0, 2, 1, 2));
  ASSERT_EQ(env.delivered.size(), 1u);
  EXPECT_EQ(env.delivered[0].node, 2);
}

TEST_F(AgentTest, ReturningOwnDataIsLoop) {
  Agent a(0, cfg, env);
  a.recv(data(0, 5, 1, 3));
  EXPECT_EQ(env.count(trace::Event::Drop, "LOOP"), 1u);
}

TEST_F(AgentTest, ExhaustedTtlDropped) {
  Agent a(1, cfg, env);
  Packet p = data(0, 5, 1, 3);
  p.ip.ttl = 1;
  a.recv(p);
  EXPECT_EQ(env.count(trace::Event::Drop, "TTL"), 1u);
  Packet q = data(1, 5);
  q.ip.ttl = 0;
  q.size = 532;
  a.forward(nullptr, q, Time{});
  EXPECT_EQ(env.count(trace::Event::Drop, "TTL"), 2u);
}

TEST_F(AgentTest, UnknownControlCodeDropped) {
  Agent a(1, cfg, env);
  Packet p;
  p.kind = PacketKind::Aodv;
  p.size = 44;
  p.ip = IpHeader{0, kRoutingPort, kBroadcast, kRoutingPort, 1};
  p.aodv = UnknownAodvHeader{0x9};
  a.recv(p);
  ASSERT_EQ(env.records.size(), 1u);
  EXPECT_EQ(env.records[0].event, trace::Event::Drop);
  EXPECT_EQ(env.records[0].reason, "ERR");
  EXPECT_NE(env.lines()[0].find("[0x9]"), std::string::npos);
}

TEST_F(AgentTest, RelayForwardsOverUpRouteAndRefreshes) {
  Agent a(1, cfg, env);
  a.rt_update(a.routes().add(5), 4, 2, 3, seconds(1.0));
  env.advance(seconds(0.5));
  a.recv(data(0, 5, 1, 1));
  ASSERT_EQ(env.sent.size(), 1u);
  EXPECT_EQ(env.sent[0].pkt.next_hop, 3);
  EXPECT_EQ(env.sent[0].pkt.ip.ttl, 29);
  EXPECT_EQ(env.records.back().event, trace::Event::Forward);
  EXPECT_EQ(a.routes().lookup(5)->expire, seconds(10.5));
}

TEST_F(AgentTest, RelayWithoutRouteErrorsUpstream) {
  Agent a(1, cfg, env);
  a.recv(data(0, 5, 1, 1));
  EXPECT_EQ(env.count(trace::Event::Drop, "NRTE"), 1u);
  EXPECT_EQ(env.count(trace::Event::Send, "ERROR"), 1u);
  EXPECT_EQ(a.rqueue().size(), 0u);
}

TEST_F(AgentTest, BroadcastFailureSilent) {
  Agent a(0, cfg, env);
  Packet p = rreq(0, 1, 2, 4, 0, 0, 0);
  p.next_hop = kBroadcast;
  a.rt_ll_failed(p);
  EXPECT_TRUE(env.records.empty());
}

TEST_F(AgentTest, ControlFailureDropped) {
  Agent a(1, cfg, env);
  Packet p = rrep(2, 0, 2, 4, 1, 2);
  p.next_hop = 0;
  a.rt_ll_failed(p);
  EXPECT_EQ(env.count(trace::Event::Drop, "CBK"), 1u);
}

TEST_F(AgentTest, FailureNearDestinationRepairsLocally) {
  // Node 2 on 0-1-2-3 loses the link to 3 while relaying.
  Agent a(2, cfg, env);
  a.rt_update(a.routes().add(3), 4, 1, 3, seconds(10.0));
  Packet p = data(0, 3, 1, 2);
  p.next_hop = 3;
  a.rt_ll_failed(p);
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Repair);
  EXPECT_EQ(a.rqueue().count(3), 1u);
  ASSERT_EQ(env.sent.size(), 1u);
  // Asks for something newer than the route it lost.
  EXPECT_EQ(std::get<RreqHeader>(env.sent[0].pkt.aodv).dst_seqno, 5u);

  // Another failure while repairing just queues.
  Packet q = data(0, 3, 2, 2);
  q.next_hop = 3;
  a.rt_ll_failed(q);
  EXPECT_EQ(a.rqueue().count(3), 2u);
  EXPECT_EQ(env.sent.size(), 1u);

  // A fresh reply completes the repair and flushes the queue.
  a.recv(rrep(3, 0, 3, 6, 2, 4));
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Up);
  EXPECT_EQ(a.routes().lookup(3)->nexthop, 4);
  EXPECT_EQ(a.rqueue().size(), 0u);
}

TEST_F(AgentTest, FailedLocalRepairReportsUpstream) {
  Agent a(2, cfg, env);
  a.start();
  a.rt_update(a.routes().add(3), 4, 1, 3, seconds(100.0));
  Packet p = data(0, 3, 1, 2);
  p.next_hop = 3;
  a.rt_ll_failed(p);
  env.advance(seconds(1.79));
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Repair);
  env.advance(seconds(1.8));
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Down);
  EXPECT_EQ(env.count(trace::Event::Drop, "NRTE"), 1u);
  ASSERT_EQ(env.count(trace::Event::Send, "ERROR"), 1u);
  EXPECT_EQ(std::get<RerrHeader>(env.sent.back().pkt.aodv).unreachable,
            (std::vector<std::pair<NodeId, SeqNo>>{{3, 5}}));
}

TEST_F(AgentTest, FailureNearSourceBringsRouteDown) {
  Agent a(0, cfg, env);
  a.nb_insert(1);
  a.rt_update(a.routes().add(3), 4, 3, 1, seconds(10.0));
  Packet p = data(0, 3, 1, 0);
  p.size = 532;
  p.next_hop = 1;
  a.rt_ll_failed(p);
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Down);
  EXPECT_FALSE(a.nb_lookup(1).has_value());
  EXPECT_EQ(env.count(trace::Event::Drop, "CBK"), 1u);
  EXPECT_EQ(env.count(trace::Event::Send, "ERROR"), 1u);
}

TEST_F(AgentTest, FailureWithoutLinkDetectionDrops) {
  cfg.link_layer_detection = false;
  Agent a(2, cfg, env);
  a.rt_update(a.routes().add(3), 4, 1, 3, seconds(10.0));
  Packet p = data(0, 3, 1, 2);
  p.next_hop = 3;
  a.rt_ll_failed(p);
  EXPECT_EQ(a.routes().lookup(3)->flag, RouteFlag::Up);
  EXPECT_EQ(env.count(trace::Event::Drop, "CBK"), 1u);
}

TEST_F(AgentTest, PurgeDropsBufferedOnExpiredRoute) {
  Agent a(0, cfg, env);
  a.rt_update(a.routes().add(1), 4, 1, 1, seconds(1.0));
  for (std::uint64_t k = 1; k <= 3; ++k) a.rq_enque(data(0, 1, k));
  env.advance(seconds(1.0));
  a.rt_purge();
  EXPECT_EQ(env.count(trace::Event::Drop, "NRTE"), 3u);
  EXPECT_EQ(a.routes().lookup(1)->flag, RouteFlag::Down);
}

TEST_F(AgentTest, PurgeForwardsBufferedOnValidRoute) {
  Agent a(0, cfg, env);
  a.rt_update(a.routes().add(1), 4, 1, 1, seconds(5.0));
  a.rq_enque(data(0, 1, 7));
  a.rt_purge();
  ASSERT_EQ(env.sent.size(), 1u);
  EXPECT_EQ(env.sent[0].pkt.uid, 7u);
  EXPECT_EQ(env.records.back().event, trace::Event::Send);
}

TEST_F(AgentTest, PurgeRequestsForBufferedDownRoute) {
  Agent a(0, cfg, env);
  a.routes().add(1);
  a.rq_enque(data(0, 1, 7));
  a.rt_purge();
  EXPECT_EQ(env.count(trace::Event::Send, "REQUEST"), 1u);
}

TEST_F(AgentTest, PurgeRemovesStaleDownRoutes) {
  Agent a(0, cfg, env);
  RouteEntry& rt = a.routes().add(1);
  a.rt_update(rt, 2, 1, 1, seconds(1.0));
  a.rt_down(rt);  // expires at 4.5
  env.advance(seconds(4.0));
  a.rt_purge();
  EXPECT_NE(a.routes().lookup(1), nullptr);
  env.advance(seconds(4.5));
  a.rt_purge();
  EXPECT_EQ(a.routes().lookup(1), nullptr);
}

TEST_F(AgentTest, PurgeTimesOutOldPackets) {
  Agent a(0, cfg, env);
  a.routes().add(1).rreq_deadline = seconds(1000.0);  // keep discovery quiet
  a.rq_enque(data(0, 1, 7));
  env.advance(seconds(30.0));
  a.rt_purge();
  EXPECT_EQ(env.count(trace::Event::Drop, "TOUT"), 1u);
}

TEST_F(AgentTest, QueueOverflowTracedAsIfq) {
  cfg.rqueue_capacity = 2;
  Agent a(0, cfg, env);
  for (std::uint64_t k = 1; k <= 3; ++k) a.rq_enque(data(0, 1, k));
  ASSERT_EQ(env.count(trace::Event::Drop, "IFQ"), 1u);
  EXPECT_EQ(env.records.back().uid, 1u);
}

TEST_F(AgentTest, BroadcastIdsExpire) {
  Agent a(0, cfg, env);
  a.id_insert(3, 1);
  EXPECT_TRUE(a.id_lookup(3, 1));
  env.advance(seconds(6.0));
  EXPECT_EQ(a.id_purge(), 1u);
  EXPECT_FALSE(a.id_lookup(3, 1));
}

}  // namespace
}  // namespace aodvsim
