#ifndef AODVSIM_AODV_PACKET_TRACE_H
#define AODVSIM_AODV_PACKET_TRACE_H

#include <string_view>

#include "aodvsim/aodv/packet.h"
#include "aodvsim/trace/record.h"

namespace aodvsim {

/// Builds the trace line for `pkt` as seen by `node`.
///
/// Receive records carry the MAC header of the reception (broadcast or the
/// receiving node as destination, the transmitter as source, IP ethertype);
/// every other record carries zeros there.
trace::TraceRecord make_trace_record(trace::Event event, Time time, NodeId node,
                                     trace::Layer layer, const Packet& pkt,
                                     std::string_view reason = {});

}  // namespace aodvsim

#endif  // AODVSIM_AODV_PACKET_TRACE_H
