#include "aodvsim/trace/writer.h"

#include "aodvsim/trace/format.h"

namespace aodvsim::trace {

void write_stream(std::span<const TraceRecord> records, std::ostream& sink) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].time < records[i - 1].time) {
      throw std::invalid_argument("trace records out of time order at index " +
                                  std::to_string(i));
    }
  }
  TraceWriter writer(sink);
  for (const auto& rec : records) writer.write(rec);
  writer.flush();
}

void TraceWriter::write(const TraceRecord& rec) {
  if (written_ > 0 && rec.time < last_) {
    throw std::invalid_argument("trace record at " + rec.time.to_string() +
                                " precedes previous record at " + last_.to_string());
  }
  *sink_ << format_record(rec) << '\n';
  if (!*sink_) throw WriteError("trace sink write failed");
  last_ = rec.time;
  ++written_;
}

void TraceWriter::flush() {
  sink_->flush();
  if (!*sink_) throw WriteError("trace sink flush failed");
}

}  // namespace aodvsim::trace
