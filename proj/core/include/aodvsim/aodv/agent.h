#ifndef AODVSIM_AODV_AGENT_H
#define AODVSIM_AODV_AGENT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "aodvsim/aodv/broadcast_id_cache.h"
#include "aodvsim/aodv/config.h"
#include "aodvsim/aodv/neighbor_table.h"
#include "aodvsim/aodv/packet.h"
#include "aodvsim/aodv/request_queue.h"
#include "aodvsim/aodv/route_table.h"
#include "aodvsim/kernel/random.h"
#include "aodvsim/kernel/scheduler.h"
#include "aodvsim/trace/record.h"

namespace aodvsim {

/// What an agent needs from the node it runs on.
class AgentEnvironment {
 public:
  virtual ~AgentEnvironment() = default;

  virtual Scheduler& scheduler() = 0;
  virtual RandomSource& random() = 0;
  virtual void trace(const trace::TraceRecord& rec) = 0;
  /// Puts a packet on the channel. pkt.next_hop is kBroadcast or a neighbor.
  virtual void transmit(NodeId from, const Packet& pkt) = 0;
  /// Hands a data packet addressed to `node` up to its application.
  virtual void deliver_local(NodeId node, const Packet& pkt) = 0;
};

enum class TimerKind { Broadcast, Hello, Neighbor, RouteCache, LocalRepair };

/// Per-node AODV routing agent.
///
/// Every handler runs synchronously inside a scheduler event and reads the
/// current time from the scheduler clock.
class Agent {
 public:
  Agent(NodeId self, AodvConfig config, AgentEnvironment& env);
  Agent(const Agent&) = delete;
  Agent& operator=(const Agent&) = delete;

  /// Arms the broadcast-id, neighbor and route-cache timers, plus the hello
  /// timer when HELLOs are enabled. Each fires once immediately. Throws
  /// std::logic_error if called twice.
  void start();
  bool started() const { return started_; }

  // Reception.
  void recv(Packet pkt);
  void recv_aodv(Packet pkt);
  void recv_request(Packet pkt);
  void recv_reply(Packet pkt);
  void recv_error(Packet pkt);
  void recv_hello(Packet pkt);

  // Transmission.
  void send_hello();
  void send_request(NodeId dst);
  void send_reply(NodeId ipdst, std::uint32_t hop_count, NodeId rpdst, SeqNo rpseq,
                  Time lifetime, Time timestamp);
  void send_error(Packet rerr, bool jitter);
  /// Unicast over `rt` (refreshing its lifetime), or broadcast when rt is
  /// null, after `delay`.
  void forward(RouteEntry* rt, Packet pkt, Time delay);

  // Route management.
  void rt_resolve(Packet pkt);
  void rt_update(RouteEntry& rt, SeqNo seqno, std::uint16_t metric, NodeId nexthop,
                 Time expire_time);
  void rt_down(RouteEntry& rt);
  void local_rt_repair(RouteEntry& rt, Packet pkt);
  /// Link layer could not deliver pkt to pkt.next_hop.
  void rt_ll_failed(Packet pkt);
  void handle_link_failure(NodeId id);
  void rt_purge();

  // Neighbor management.
  /// Inserts or refreshes a neighbor and installs a one-hop route to it.
  void nb_insert(NodeId id, SeqNo seqno = 0);
  std::optional<Neighbor> nb_lookup(NodeId id) const { return neighbors_.lookup(id); }
  void nb_delete(NodeId id);
  std::size_t nb_purge();

  // Broadcast id management.
  void id_insert(NodeId src, std::uint32_t bid);
  bool id_lookup(NodeId src, std::uint32_t bid) const;
  std::size_t id_purge();

  // Send buffer. Overflow evictions are traced as drops.
  void rq_enque(Packet pkt);
  std::optional<Packet> rq_deque(NodeId dst) { return rqueue_.deque(dst); }

  void handle_timer(TimerKind kind, NodeId dst = kNoNode);

  NodeId id() const { return self_; }
  SeqNo seqno() const { return seqno_; }
  std::uint32_t bcast_id() const { return bid_; }
  const AodvConfig& config() const { return cfg_; }

  RoutingTable& routes() { return routes_; }
  const RoutingTable& routes() const { return routes_; }
  const NeighborTable& neighbors() const { return neighbors_; }
  const BroadcastIdCache& bid_cache() const { return bid_cache_; }
  const RequestQueue& rqueue() const { return rqueue_; }

 private:
  Time now() const;
  void arm(TimerKind kind, Time delay, NodeId dst = kNoNode);
  void send_packet(const Packet& pkt);
  void drop(const Packet& pkt, std::string_view reason);
  void flush_queue(NodeId dst);
  void finish_local_repair(NodeId dst);
  bool relayed_recently(const RouteEntry& rt) const;
  Packet make_control(std::uint32_t size, NodeId dst, int ttl) const;
  Packet make_rerr(RerrHeader header) const;

  NodeId self_;
  AodvConfig cfg_;
  AgentEnvironment* env_;
  bool started_ = false;

  SeqNo seqno_ = 2;
  std::uint32_t bid_ = 0;

  RoutingTable routes_;
  NeighborTable neighbors_;
  BroadcastIdCache bid_cache_;
  RequestQueue rqueue_;
};

}  // namespace aodvsim

#endif  // AODVSIM_AODV_AGENT_H
