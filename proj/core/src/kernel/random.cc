#include "aodvsim/kernel/random.h"

#include <algorithm>
#include <stdexcept>

namespace aodvsim {

double RandomSource::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
  if (lo > hi) {
    throw std::invalid_argument("uniform: lo > hi");
  }
  const double x = lo + (hi - lo) * unit();
  return std::clamp(x, lo, hi);
}

}  // namespace aodvsim
