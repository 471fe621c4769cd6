#ifndef AODVSIM_TRACE_WRITER_H
#define AODVSIM_TRACE_WRITER_H

#include <ostream>
#include <span>
#include <stdexcept>

#include "aodvsim/trace/record.h"

namespace aodvsim::trace {

class WriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes all records, one newline-terminated line each, and flushes.
/// Throws std::invalid_argument without writing anything if the timestamps
/// are not non-decreasing, and WriteError if the sink fails.
void write_stream(std::span<const TraceRecord> records, std::ostream& sink);

/// Incremental writer that enforces non-decreasing timestamps.
class TraceWriter {
 public:
  explicit TraceWriter(std::ostream& sink) : sink_(&sink) {}

  void write(const TraceRecord& rec);
  void flush();

  std::size_t written() const { return written_; }

 private:
  std::ostream* sink_;
  Time last_;
  std::size_t written_ = 0;
};

}  // namespace aodvsim::trace

#endif  // AODVSIM_TRACE_WRITER_H
