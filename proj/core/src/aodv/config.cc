#include "aodvsim/aodv/config.h"

#include <stdexcept>

namespace aodvsim {

void AodvConfig::validate() const {
  if (min_hello_interval > max_hello_interval) {
    throw std::invalid_argument("MinHelloInterval exceeds MaxHelloInterval");
  }
  const double periods[] = {hello_interval,       min_hello_interval, max_hello_interval,
                            bcast_id_save,        frequency,          active_route_timeout,
                            my_route_timeout,     delete_period,      rev_route_life,
                            node_traversal_time,  max_rreq_timeout,   rqueue_timeout};
  for (double p : periods) {
    if (!(p > 0.0)) throw std::invalid_argument("protocol periods must be positive");
  }
  if (network_diameter == 0) throw std::invalid_argument("NETWORK_DIAMETER must be positive");
  if (rqueue_capacity == 0) throw std::invalid_argument("request queue capacity must be positive");
}

}  // namespace aodvsim
