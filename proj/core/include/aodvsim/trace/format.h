#ifndef AODVSIM_TRACE_FORMAT_H
#define AODVSIM_TRACE_FORMAT_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "aodvsim/trace/record.h"

namespace aodvsim::trace {

/// Raised by parse_line. `column` is the 1-based column that failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(int column, const std::string& what);
  int column() const { return column_; }

 private:
  int column_;
};

/// Canonical single-line rendering, without a trailing newline.
std::string format_record(const TraceRecord& rec);

/// Whitespace-tolerant parser; format_record(parse_line(x)) == x for any
/// canonical line.
TraceRecord parse_line(std::string_view line);

}  // namespace aodvsim::trace

#endif  // AODVSIM_TRACE_FORMAT_H
