#ifndef AODVSIM_NET_TRAFFIC_H
#define AODVSIM_NET_TRAFFIC_H

#include <cstdint>
#include <vector>

#include "aodvsim/net/scenario.h"

namespace aodvsim {

/// Emission instant of the k-th packet of a flow: start + k / rate.
Time emission_time(const FlowSpec& flow, std::uint64_t k);

/// Every emission instant in [start, stop).
std::vector<Time> emission_times(const FlowSpec& flow);

}  // namespace aodvsim

#endif  // AODVSIM_NET_TRAFFIC_H
