#include "aodvsim/trace/stats.h"

#include <cstdio>
#include <string>
#include <vector>

#include "aodvsim/trace/format.h"

namespace aodvsim::trace {

std::uint64_t StatsReport::in_flight() const {
  const auto done = delivered + data_dropped;
  return originated > done ? originated - done : 0;
}

double StatsReport::delivery_ratio() const {
  return originated == 0 ? 0.0 : static_cast<double>(delivered) / static_cast<double>(originated);
}

double StatsReport::control_overhead() const {
  return delivered == 0 ? 0.0 : static_cast<double>(aodv_sent) / static_cast<double>(delivered);
}

double StatsReport::mean_hops() const {
  return delivered == 0 ? 0.0 : static_cast<double>(hop_sum) / static_cast<double>(delivered);
}

namespace {

void accumulate(StatsReport& s, const TraceRecord& rec) {
  ++s.records;
  const bool data = std::holds_alternative<DataInfo>(rec.payload);
  if (rec.event == Event::Drop) {
    ++s.dropped;
    ++s.drops_by_reason[rec.reason.empty() ? std::string("---") : rec.reason];
    if (data) ++s.data_dropped;
  }
  if (rec.layer == Layer::Agt && data) {
    if (rec.event == Event::Send) ++s.originated;
    if (rec.event == Event::Receive) {
      ++s.delivered;
      s.hop_sum += std::get<DataInfo>(rec.payload).hops;
    }
  }
  if (rec.layer == Layer::Rtr && rec.ptype == "AODV" &&
      (rec.event == Event::Send || rec.event == Event::Forward)) {
    ++s.aodv_sent;
  }
  const auto label = rec.label();
  if (label == "HELLO") ++s.hello;
  if (label == "REQUEST") ++s.request;
  if (label == "REPLY") ++s.reply;
  if (label == "ERROR") ++s.error;
}

}  // namespace

StatsReport compute_stats(std::span<const TraceRecord> records) {
  StatsReport s;
  for (const auto& rec : records) accumulate(s, rec);
  return s;
}

StatsInputError::StatsInputError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

StatsReport compute_stats(std::istream& in) {
  StatsReport s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      accumulate(s, parse_line(line));
    } catch (const ParseError& e) {
      throw StatsInputError(lineno, e.what());
    }
  }
  return s;
}

namespace {

std::string fmt_ratio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void print_table(const StatsReport& r, std::ostream& out) {
  const auto row = [&](const std::string& name, const std::string& value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "  %-22s %12s\n", name.c_str(), value.c_str());
    out << buf;
  };
  out << "Trace summary (" << r.records << " records)\n";
  row("data originated", std::to_string(r.originated));
  row("data delivered", std::to_string(r.delivered));
  row("data dropped", std::to_string(r.data_dropped));
  row("data in flight", std::to_string(r.in_flight()));
  row("delivery ratio", r.originated == 0 ? "undefined" : fmt_ratio(r.delivery_ratio()));
  row("mean hop count", r.delivered == 0 ? "undefined" : fmt_ratio(r.mean_hops()));
  row("aodv packets sent", std::to_string(r.aodv_sent));
  row("control overhead", r.delivered == 0 ? "undefined" : fmt_ratio(r.control_overhead()));
  out << "AODV records by type\n";
  row("HELLO", std::to_string(r.hello));
  row("REQUEST", std::to_string(r.request));
  row("REPLY", std::to_string(r.reply));
  row("ERROR", std::to_string(r.error));
  out << "Drops by reason (" << r.dropped << " total)\n";
  for (const auto& [reason, n] : r.drops_by_reason) row(reason, std::to_string(n));
}

void print_key_values(const StatsReport& r, std::ostream& out) {
  out << "records=" << r.records << '\n'
      << "originated=" << r.originated << '\n'
      << "delivered=" << r.delivered << '\n'
      << "data_dropped=" << r.data_dropped << '\n'
      << "in_flight=" << r.in_flight() << '\n'
      << "delivery_ratio=" << fmt_ratio(r.delivery_ratio()) << '\n'
      << "mean_hops=" << fmt_ratio(r.mean_hops()) << '\n'
      << "aodv_sent=" << r.aodv_sent << '\n'
      << "control_overhead=" << fmt_ratio(r.control_overhead()) << '\n'
      << "hello=" << r.hello << '\n'
      << "request=" << r.request << '\n'
      << "reply=" << r.reply << '\n'
      << "error=" << r.error << '\n'
      << "dropped=" << r.dropped << '\n';
  for (const auto& [reason, n] : r.drops_by_reason) out << "drop." << reason << '=' << n << '\n';
}

}  // namespace aodvsim::trace
