#ifndef AODVSIM_AODV_PACKET_H
#define AODVSIM_AODV_PACKET_H

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "aodvsim/kernel/time.h"

namespace aodvsim {

using NodeId = std::int32_t;
using SeqNo = std::uint32_t;

inline constexpr NodeId kBroadcast = -1;
inline constexpr NodeId kNoNode = -1;

/// Port used by the routing agent on both ends of control traffic.
inline constexpr std::uint16_t kRoutingPort = 255;
inline constexpr std::uint16_t kDataPort = 0;

inline constexpr std::uint32_t kIpHeaderBytes = 20;
/// TTL stamped by a traffic source before the routing layer takes over.
inline constexpr int kDefaultIpTtl = 32;

/// Wire type codes as they appear in traces.
enum class AodvType : std::uint8_t {
  Hello = 0x1,
  Request = 0x2,
  Reply = 0x4,
  Error = 0x8,
};

/// Route request. `hop_count` counts links already traversed, so it is 0
/// when the originator broadcasts it.
struct RreqHeader {
  std::uint32_t hop_count = 0;
  std::uint32_t bcast_id = 0;
  NodeId dst = kNoNode;
  SeqNo dst_seqno = 0;
  NodeId src = kNoNode;
  SeqNo src_seqno = 0;
  Time timestamp;
};

/// Route reply. HELLO messages reuse this layout with `is_hello` set.
/// `hop_count` is the route length the receiver should record.
struct RrepHeader {
  bool is_hello = false;
  std::uint32_t hop_count = 0;
  NodeId rpdst = kNoNode;
  SeqNo rpseq = 0;
  /// Whole microseconds, as carried on the wire and printed in traces.
  std::int64_t lifetime_us = 0;
  Time timestamp;
};

struct RerrHeader {
  std::vector<std::pair<NodeId, SeqNo>> unreachable;
  std::size_t dest_count() const { return unreachable.size(); }
};

/// Carries an unrecognized type code so that the drop path can be exercised.
struct UnknownAodvHeader {
  std::uint8_t code = 0;
};

using AodvHeader =
    std::variant<std::monostate, RreqHeader, RrepHeader, RerrHeader, UnknownAodvHeader>;

struct IpHeader {
  NodeId src = kNoNode;
  std::uint16_t sport = 0;
  NodeId dst = kNoNode;
  std::uint16_t dport = 0;
  int ttl = kDefaultIpTtl;
};

enum class PacketKind : std::uint8_t { Aodv, Data };

/// A simulated packet: common header, IP header, and either an AODV control
/// header or a CBR data header.
struct Packet {
  PacketKind kind = PacketKind::Data;
  /// Global id for data packets; 0 for AODV control traffic.
  std::uint64_t uid = 0;
  std::uint32_t size = 0;
  IpHeader ip;
  NodeId next_hop = kNoNode;
  NodeId prev_hop = kNoNode;
  /// Links traversed so far.
  std::uint32_t num_forwards = 0;

  AodvHeader aodv;
  std::uint32_t flow_seq = 0;

  bool is_broadcast() const { return ip.dst == kBroadcast; }
  bool is_data() const { return kind == PacketKind::Data; }
};

std::uint32_t hello_size();
std::uint32_t rreq_size();
std::uint32_t rrep_size();
std::uint32_t rerr_size(std::size_t dest_count);

}  // namespace aodvsim

#endif  // AODVSIM_AODV_PACKET_H
