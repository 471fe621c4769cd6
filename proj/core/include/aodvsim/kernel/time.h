#ifndef AODVSIM_KERNEL_TIME_H
#define AODVSIM_KERNEL_TIME_H

#include <compare>
#include <cstdint>
#include <string>

namespace aodvsim {

/// Virtual simulation time, held as signed integer nanoseconds.
///
/// The trace format prints nine decimal places, so nanoseconds are the
/// natural resolution: every instant the simulator produces is exactly
/// representable in the trace and parses back to the same value.
/// The same type is used for instants and for durations.
class Time {
 public:
  constexpr Time() = default;

  static constexpr Time from_ns(std::int64_t ns) { return Time(ns); }
  /// Rounds to the nearest nanosecond.
  static Time from_seconds(double seconds);

  constexpr std::int64_t ns() const { return ns_; }
  constexpr double seconds() const { return static_cast<double>(ns_) / 1e9; }

  /// "S.NNNNNNNNN" with exactly nine fractional digits.
  std::string to_string() const;

  constexpr auto operator<=>(const Time&) const = default;

  constexpr Time& operator+=(Time o) {
    ns_ += o.ns_;
    return *this;
  }
  constexpr Time& operator-=(Time o) {
    ns_ -= o.ns_;
    return *this;
  }
  friend constexpr Time operator+(Time a, Time b) { return a += b; }
  friend constexpr Time operator-(Time a, Time b) { return a -= b; }

 private:
  constexpr explicit Time(std::int64_t ns) : ns_(ns) {}
  std::int64_t ns_ = 0;
};

inline Time seconds(double s) { return Time::from_seconds(s); }

}  // namespace aodvsim

#endif  // AODVSIM_KERNEL_TIME_H
