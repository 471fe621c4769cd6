#ifndef AODVSIM_TRACE_STATS_H
#define AODVSIM_TRACE_STATS_H

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "aodvsim/trace/record.h"

namespace aodvsim::trace {

/// Summary of one trace.
struct StatsReport {
  std::uint64_t records = 0;
  std::uint64_t originated = 0;  // data packets sent at AGT
  std::uint64_t delivered = 0;   // data packets received at AGT
  std::uint64_t data_dropped = 0;
  std::uint64_t dropped = 0;  // all D records
  std::map<std::string, std::uint64_t> drops_by_reason;
  std::uint64_t aodv_sent = 0;  // s and f AODV records at RTR
  std::uint64_t hello = 0;
  std::uint64_t request = 0;
  std::uint64_t reply = 0;
  std::uint64_t error = 0;
  std::uint64_t hop_sum = 0;

  /// Packets neither delivered nor dropped by the end of the trace.
  std::uint64_t in_flight() const;
  /// delivered / originated, or 0 when nothing was originated.
  double delivery_ratio() const;
  /// AODV packets sent per data packet delivered, or 0 when none delivered.
  double control_overhead() const;
  double mean_hops() const;
};

StatsReport compute_stats(std::span<const TraceRecord> records);

/// Raised by the stream overload; `line` is 1-based.
class StatsInputError : public std::runtime_error {
 public:
  StatsInputError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses and summarizes a trace stream. Blank lines are skipped.
StatsReport compute_stats(std::istream& in);

/// Aligned human-readable table.
void print_table(const StatsReport& report, std::ostream& out);
/// One key=value pair per line.
void print_key_values(const StatsReport& report, std::ostream& out);

}  // namespace aodvsim::trace

#endif  // AODVSIM_TRACE_STATS_H
