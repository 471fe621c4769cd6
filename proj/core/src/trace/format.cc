#include "aodvsim/trace/format.h"

#include <charconv>
#include <cstdio>
#include <tuple>
#include <vector>

namespace aodvsim::trace {

ParseError::ParseError(int column, const std::string& what)
    : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column) {}

namespace {

void append_padded(std::string& out, std::string_view s, std::size_t width) {
  for (std::size_t i = s.size(); i < width; ++i) out.push_back(' ');
  out.append(s);
}

template <typename T>
void append_int(std::string& out, T v, int base = 10) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, base);
  out.append(buf, end);
}

void append_fixed6(std::string& out, std::int64_t micros) {
  char buf[48];
  const char* sign = micros < 0 ? "-" : "";
  const long long mag = micros < 0 ? -micros : micros;
  std::snprintf(buf, sizeof(buf), "%s%lld.%06lld", sign, mag / 1'000'000, mag % 1'000'000);
  out.append(buf);
}

void append_payload(std::string& out, const Payload& payload) {
  if (const auto* rp = std::get_if<ReplyInfo>(&payload)) {
    out += " [0x";
    append_int(out, rp->code, 16);
    out += ' ';
    append_int(out, rp->hop_count);
    out += " [";
    append_int(out, rp->dst);
    out += ' ';
    append_int(out, rp->dst_seqno);
    out += "] ";
    append_fixed6(out, rp->lifetime_us);
    out += ']';
  } else if (const auto* rq = std::get_if<RequestInfo>(&payload)) {
    out += " [0x";
    append_int(out, rq->code, 16);
    out += ' ';
    append_int(out, rq->hop_count);
    out += ' ';
    append_int(out, rq->bcast_id);
    out += " [";
    append_int(out, rq->dst);
    out += ' ';
    append_int(out, rq->dst_seqno);
    out += "] [";
    append_int(out, rq->src);
    out += ' ';
    append_int(out, rq->src_seqno);
    out += "]]";
  } else if (const auto* re = std::get_if<ErrorInfo>(&payload)) {
    out += " [0x";
    append_int(out, re->code, 16);
    out += ' ';
    append_int(out, re->unreachable.size());
    for (const auto& [dst, seq] : re->unreachable) {
      out += " [";
      append_int(out, dst);
      out += ' ';
      append_int(out, seq);
      out += ']';
    }
    out += ']';
  } else if (const auto* un = std::get_if<UnknownAodvInfo>(&payload)) {
    out += " [0x";
    append_int(out, un->code, 16);
    out += ']';
  } else if (const auto* d = std::get_if<DataInfo>(&payload)) {
    out += " [";
    append_int(out, d->seq);
    out += ' ';
    append_int(out, d->hops);
    out += ']';
  }
}

// Splits on whitespace, keeping bracket and parenthesis groups whole.
std::vector<std::string_view> tokenize(std::string_view s, int column_for_errors) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (s[i] == '[' || s[i] == '(') {
      const char open = s[i];
      const char close = open == '[' ? ']' : ')';
      int depth = 0;
      for (; i < s.size(); ++i) {
        if (s[i] == open) ++depth;
        if (s[i] == close && --depth == 0) break;
      }
      if (i == s.size()) {
        throw ParseError(column_for_errors < 0 ? static_cast<int>(tokens.size()) + 1
                                               : column_for_errors,
                         "unterminated group");
      }
      ++i;
    } else {
      while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r' && s[i] != '\n') ++i;
    }
    tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
T parse_int(std::string_view tok, int column, std::string_view what, int base = 10) {
  T v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, base);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError(column, "malformed " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return v;
}

// Parses "W.F" with at most `digits` fractional digits into units of
// 10^-digits.
std::int64_t parse_fixed(std::string_view tok, int digits, int column, std::string_view what) {
  const auto dot = tok.find('.');
  const std::string_view whole = tok.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : tok.substr(dot + 1);
  if (whole.empty() || static_cast<int>(frac.size()) > digits ||
      (dot != std::string_view::npos && frac.empty())) {
    throw ParseError(column, "malformed " + std::string(what) + " '" + std::string(tok) + "'");
  }
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const auto w = parse_int<std::int64_t>(whole, column, what);
  if (w < 0) throw ParseError(column, "negative " + std::string(what));
  std::int64_t f = 0;
  if (!frac.empty()) {
    f = parse_int<std::int64_t>(frac, column, what);
    for (int i = static_cast<int>(frac.size()); i < digits; ++i) f *= 10;
  }
  return w * scale + f;
}

std::string_view strip_group(std::string_view tok, char open, char close, int column,
                             std::string_view what) {
  if (tok.size() < 2 || tok.front() != open || tok.back() != close) {
    throw ParseError(column, "expected " + std::string(what) + " group, got '" +
                                 std::string(tok) + "'");
  }
  return tok.substr(1, tok.size() - 2);
}

std::pair<std::int32_t, std::uint32_t> parse_pair(std::string_view tok, int column) {
  auto parts = tokenize(strip_group(tok, '[', ']', column, "[id seqno]"), column);
  if (parts.size() != 2) throw ParseError(column, "expected [id seqno]");
  return {parse_int<std::int32_t>(parts[0], column, "id"),
          parse_int<std::uint32_t>(parts[1], column, "seqno")};
}

std::pair<std::int32_t, std::int32_t> parse_addr(std::string_view tok, int column) {
  const auto colon = tok.find(':');
  if (colon == std::string_view::npos) throw ParseError(column, "expected addr:port");
  return {parse_int<std::int32_t>(tok.substr(0, colon), column, "address"),
          parse_int<std::int32_t>(tok.substr(colon + 1), column, "port")};
}

Payload parse_payload(std::string_view tok) {
  constexpr int kColumn = 12;
  auto parts = tokenize(strip_group(tok, '[', ']', kColumn, "payload"), kColumn);
  if (parts.empty()) throw ParseError(kColumn, "empty payload group");
  if (!parts[0].starts_with("0x")) {
    if (parts.size() != 2) throw ParseError(kColumn, "data group needs [seq hops]");
    return DataInfo{parse_int<std::uint32_t>(parts[0], kColumn, "data seq"),
                    parse_int<std::uint32_t>(parts[1], kColumn, "hop count")};
  }
  const auto code = parse_int<std::uint32_t>(parts[0].substr(2), kColumn, "type code", 16);
  switch (code) {
    case 0x1:
    case 0x4: {
      if (parts.size() != 4) throw ParseError(kColumn, "reply group needs 4 fields");
      ReplyInfo rp;
      rp.code = code;
      rp.hop_count = parse_int<std::uint32_t>(parts[1], kColumn, "hop count");
      std::tie(rp.dst, rp.dst_seqno) = parse_pair(parts[2], kColumn);
      rp.lifetime_us = parse_fixed(parts[3], 6, kColumn, "lifetime");
      return rp;
    }
    case 0x2: {
      if (parts.size() != 5) throw ParseError(kColumn, "request group needs 5 fields");
      RequestInfo rq;
      rq.code = code;
      rq.hop_count = parse_int<std::uint32_t>(parts[1], kColumn, "hop count");
      rq.bcast_id = parse_int<std::uint32_t>(parts[2], kColumn, "broadcast id");
      std::tie(rq.dst, rq.dst_seqno) = parse_pair(parts[3], kColumn);
      std::tie(rq.src, rq.src_seqno) = parse_pair(parts[4], kColumn);
      return rq;
    }
    case 0x8: {
      if (parts.size() < 2) throw ParseError(kColumn, "error group needs a count");
      ErrorInfo re;
      re.code = code;
      const auto n = parse_int<std::size_t>(parts[1], kColumn, "destination count");
      if (parts.size() != n + 2) throw ParseError(kColumn, "destination count mismatch");
      for (std::size_t i = 0; i < n; ++i) re.unreachable.push_back(parse_pair(parts[i + 2], kColumn));
      return re;
    }
    default:
      if (parts.size() != 1) throw ParseError(kColumn, "unknown type code with fields");
      return UnknownAodvInfo{code};
  }
}

}  // namespace

std::string format_record(const TraceRecord& rec) {
  std::string out;
  out.reserve(128);
  out.push_back(static_cast<char>(rec.event));
  out += ' ';
  out += rec.time.to_string();
  out += " _";
  append_int(out, rec.node);
  out += "_ ";
  append_padded(out, to_string(rec.layer), 3);
  out += ' ';
  append_padded(out, rec.reason.empty() ? std::string_view("---") : rec.reason, 4);
  out += ' ';
  append_int(out, rec.uid);
  out += ' ';
  out += rec.ptype;
  out += ' ';
  append_int(out, rec.size);
  out += " [";
  append_int(out, rec.mac.duration, 16);
  out += ' ';
  append_int(out, rec.mac.dst, 16);
  out += ' ';
  append_int(out, rec.mac.src, 16);
  out += ' ';
  append_int(out, rec.mac.type, 16);
  out += "] ------- [";
  append_int(out, rec.ip.src);
  out += ':';
  append_int(out, rec.ip.sport);
  out += ' ';
  append_int(out, rec.ip.dst);
  out += ':';
  append_int(out, rec.ip.dport);
  out += ' ';
  append_int(out, rec.ip.ttl);
  out += ' ';
  append_int(out, rec.ip.nexthop);
  out += ']';
  append_payload(out, rec.payload);
  if (const auto label = rec.label(); !label.empty()) {
    out += " (";
    out += label;
    out += ')';
  }
  return out;
}

TraceRecord parse_line(std::string_view line) {
  const auto tok = tokenize(line, -1);
  const auto need = [&](std::size_t col) {
    if (tok.size() < col) throw ParseError(static_cast<int>(col), "truncated line");
    return tok[col - 1];
  };

  TraceRecord rec;
  const auto ev = need(1);
  if (ev.size() != 1 || (ev[0] != 's' && ev[0] != 'r' && ev[0] != 'D' && ev[0] != 'f')) {
    throw ParseError(1, "unknown event char '" + std::string(ev) + "'");
  }
  rec.event = static_cast<Event>(ev[0]);
  rec.time = Time::from_ns(parse_fixed(need(2), 9, 2, "time"));

  const auto node = need(3);
  if (node.size() < 3 || node.front() != '_' || node.back() != '_') {
    throw ParseError(3, "node must be written _N_");
  }
  rec.node = parse_int<std::int32_t>(node.substr(1, node.size() - 2), 3, "node id");

  const auto layer = layer_from_string(need(4));
  if (!layer) throw ParseError(4, "unknown layer '" + std::string(tok[3]) + "'");
  rec.layer = *layer;

  if (const auto r = need(5); r != "---") rec.reason = std::string(r);
  rec.uid = parse_int<std::uint64_t>(need(6), 6, "packet id");
  rec.ptype = std::string(need(7));
  rec.size = parse_int<std::uint32_t>(need(8), 8, "size");

  const auto mac = tokenize(strip_group(need(9), '[', ']', 9, "mac"), 9);
  if (mac.size() != 4) throw ParseError(9, "mac group needs 4 fields");
  rec.mac.duration = parse_int<std::uint32_t>(mac[0], 9, "duration", 16);
  rec.mac.dst = parse_int<std::uint32_t>(mac[1], 9, "mac dst", 16);
  rec.mac.src = parse_int<std::uint32_t>(mac[2], 9, "mac src", 16);
  rec.mac.type = parse_int<std::uint32_t>(mac[3], 9, "mac type", 16);

  if (need(10) != "-------") throw ParseError(10, "expected -------");

  const auto ip = tokenize(strip_group(need(11), '[', ']', 11, "ip"), 11);
  if (ip.size() != 4) throw ParseError(11, "ip group needs 4 fields");
  std::tie(rec.ip.src, rec.ip.sport) = parse_addr(ip[0], 11);
  std::tie(rec.ip.dst, rec.ip.dport) = parse_addr(ip[1], 11);
  rec.ip.ttl = parse_int<std::int32_t>(ip[2], 11, "ttl");
  rec.ip.nexthop = parse_int<std::int32_t>(ip[3], 11, "next hop");

  std::size_t next = 12;
  if (tok.size() >= next && tok[next - 1].front() == '[') {
    rec.payload = parse_payload(tok[next - 1]);
    ++next;
  }
  std::string_view label;
  if (tok.size() >= next) {
    label = strip_group(tok[next - 1], '(', ')', static_cast<int>(next), "label");
    ++next;
  }
  if (label != rec.label()) {
    throw ParseError(13, "label '" + std::string(label) + "' does not match payload");
  }
  if (tok.size() >= next) throw ParseError(static_cast<int>(next), "unexpected trailing field");
  return rec;
}

}  // namespace aodvsim::trace
