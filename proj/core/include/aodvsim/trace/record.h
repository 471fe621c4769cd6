#ifndef AODVSIM_TRACE_RECORD_H
#define AODVSIM_TRACE_RECORD_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "aodvsim/kernel/time.h"

namespace aodvsim::trace {

enum class Event : char { Send = 's', Receive = 'r', Drop = 'D', Forward = 'f' };

enum class Layer : std::uint8_t { Agt, Rtr, Ll, Ifq, Mac, Phy };

std::string_view to_string(Layer layer);
std::optional<Layer> layer_from_string(std::string_view s);

/// [duration dst src type], printed in hex.
struct MacInfo {
  std::uint32_t duration = 0;
  std::uint32_t dst = 0;
  std::uint32_t src = 0;
  std::uint32_t type = 0;

  bool operator==(const MacInfo&) const = default;
};

inline constexpr std::uint32_t kMacBroadcast = 0xffffffff;
inline constexpr std::uint32_t kEtherTypeIp = 0x800;

/// [src:sport dst:dport ttl nexthop]
struct IpInfo {
  std::int32_t src = 0;
  std::int32_t sport = 0;
  std::int32_t dst = 0;
  std::int32_t dport = 0;
  std::int32_t ttl = 0;
  std::int32_t nexthop = 0;

  bool operator==(const IpInfo&) const = default;
};

/// HELLO (code 0x1) and REPLY (code 0x4): [0xT hop [dst seq] lifetime]
struct ReplyInfo {
  std::uint32_t code = 0x4;
  std::uint32_t hop_count = 0;
  std::int32_t dst = 0;
  std::uint32_t dst_seqno = 0;
  /// Printed with six decimals.
  std::int64_t lifetime_us = 0;

  bool operator==(const ReplyInfo&) const = default;
};

/// REQUEST (code 0x2): [0xT hop bid [dst dstseq] [src srcseq]]
struct RequestInfo {
  std::uint32_t code = 0x2;
  std::uint32_t hop_count = 0;
  std::uint32_t bcast_id = 0;
  std::int32_t dst = 0;
  std::uint32_t dst_seqno = 0;
  std::int32_t src = 0;
  std::uint32_t src_seqno = 0;

  bool operator==(const RequestInfo&) const = default;
};

/// ERROR (code 0x8): [0xT count [dst seq] ...]
struct ErrorInfo {
  std::uint32_t code = 0x8;
  std::vector<std::pair<std::int32_t, std::uint32_t>> unreachable;

  bool operator==(const ErrorInfo&) const = default;
};

/// Routing packet with an unrecognized type code: [0xT]
struct UnknownAodvInfo {
  std::uint32_t code = 0;

  bool operator==(const UnknownAodvInfo&) const = default;
};

/// CBR data: [flow_seq hops]
struct DataInfo {
  std::uint32_t seq = 0;
  std::uint32_t hops = 0;

  bool operator==(const DataInfo&) const = default;
};

using Payload =
    std::variant<std::monostate, ReplyInfo, RequestInfo, ErrorInfo, UnknownAodvInfo, DataInfo>;

/// One line of a wireless trace.
///
///   s 0.000000000 _0_ RTR  --- 0 AODV 44 [0 0 0 0] ------- [0:255 -1:255 1 0] [...] (HELLO)
///
/// Column 5 holds the drop reason when there is one and "---" otherwise.
struct TraceRecord {
  Event event = Event::Send;
  Time time;
  std::int32_t node = 0;
  Layer layer = Layer::Rtr;
  std::string reason;
  std::uint64_t uid = 0;
  std::string ptype;
  std::uint32_t size = 0;
  MacInfo mac;
  IpInfo ip;
  Payload payload;

  /// HELLO, REQUEST, REPLY, ERROR, or empty.
  std::string_view label() const;

  bool operator==(const TraceRecord&) const = default;
};

std::string_view label_for_code(std::uint32_t code);

}  // namespace aodvsim::trace

#endif  // AODVSIM_TRACE_RECORD_H
