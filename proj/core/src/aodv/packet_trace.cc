#include "aodvsim/aodv/packet_trace.h"

#include <type_traits>

namespace aodvsim {

namespace {

trace::Payload payload_of(const Packet& pkt) {
  if (pkt.is_data()) return trace::DataInfo{pkt.flow_seq, pkt.num_forwards};
  return std::visit(
      [](const auto& h) -> trace::Payload {
        using H = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<H, RreqHeader>) {
          // Printed as the hop count including the current transmission.
          return trace::RequestInfo{0x2,   h.hop_count + 1, h.bcast_id, h.dst,
                                    h.dst_seqno, h.src,    h.src_seqno};
        } else if constexpr (std::is_same_v<H, RrepHeader>) {
          return trace::ReplyInfo{h.is_hello ? 0x1u : 0x4u, h.hop_count, h.rpdst, h.rpseq,
                                  h.lifetime_us};
        } else if constexpr (std::is_same_v<H, RerrHeader>) {
          trace::ErrorInfo e;
          for (const auto& [dst, seq] : h.unreachable) e.unreachable.emplace_back(dst, seq);
          return e;
        } else if constexpr (std::is_same_v<H, UnknownAodvHeader>) {
          return trace::UnknownAodvInfo{h.code};
        } else {
          return std::monostate{};
        }
      },
      pkt.aodv);
}

}  // namespace

trace::TraceRecord make_trace_record(trace::Event event, Time time, NodeId node,
                                     trace::Layer layer, const Packet& pkt,
                                     std::string_view reason) {
  trace::TraceRecord rec;
  rec.event = event;
  rec.time = time;
  rec.node = node;
  rec.layer = layer;
  rec.reason = std::string(reason);
  rec.uid = pkt.uid;
  rec.ptype = pkt.is_data() ? "cbr" : "AODV";
  rec.size = pkt.size;
  if (event == trace::Event::Receive && layer == trace::Layer::Rtr) {
    rec.mac.dst = pkt.next_hop == kBroadcast ? trace::kMacBroadcast
                                             : static_cast<std::uint32_t>(node);
    rec.mac.src = static_cast<std::uint32_t>(pkt.prev_hop < 0 ? 0 : pkt.prev_hop);
    rec.mac.type = trace::kEtherTypeIp;
  }
  rec.ip.src = pkt.ip.src;
  rec.ip.sport = pkt.ip.sport;
  rec.ip.dst = pkt.ip.dst;
  rec.ip.dport = pkt.ip.dport;
  rec.ip.ttl = pkt.ip.ttl;
  // Broadcasts and not-yet-routed packets show next hop 0.
  rec.ip.nexthop = pkt.next_hop < 0 ? 0 : pkt.next_hop;
  rec.payload = payload_of(pkt);
  return rec;
}

}  // namespace aodvsim
