#include "aodvsim/aodv/packet.h"

namespace aodvsim {

std::uint32_t hello_size() { return kIpHeaderBytes + 24; }
std::uint32_t rreq_size() { return kIpHeaderBytes + 28; }
std::uint32_t rrep_size() { return kIpHeaderBytes + 24; }
std::uint32_t rerr_size(std::size_t dest_count) {
  return kIpHeaderBytes + 4 + 8 * static_cast<std::uint32_t>(dest_count);
}

}  // namespace aodvsim
