#include "aodvsim/kernel/time.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace aodvsim {

Time Time::from_seconds(double seconds) {
  if (!std::isfinite(seconds)) {
    throw std::invalid_argument("time must be finite");
  }
  return Time(std::llround(seconds * 1e9));
}

std::string Time::to_string() const {
  const std::int64_t whole = ns_ / 1'000'000'000;
  const std::int64_t frac = std::llabs(ns_ % 1'000'000'000);
  char buf[48];
  if (ns_ < 0 && whole == 0) {
    std::snprintf(buf, sizeof(buf), "-0.%09lld", static_cast<long long>(frac));
  } else {
    std::snprintf(buf, sizeof(buf), "%lld.%09lld", static_cast<long long>(whole),
                  static_cast<long long>(frac));
  }
  return buf;
}

}  // namespace aodvsim
