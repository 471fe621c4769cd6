#include "aodvsim/net/traffic.h"

namespace aodvsim {

Time emission_time(const FlowSpec& flow, std::uint64_t k) {
  return flow.start + seconds(static_cast<double>(k) / flow.rate);
}

std::vector<Time> emission_times(const FlowSpec& flow) {
  std::vector<Time> out;
  for (std::uint64_t k = 0;; ++k) {
    const Time t = emission_time(flow, k);
    if (t >= flow.stop) break;
    out.push_back(t);
  }
  return out;
}

}  // namespace aodvsim
