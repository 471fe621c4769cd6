#include "aodvsim/net/scenario.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace aodvsim {

ScenarioError::ScenarioError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

void ScenarioConfig::validate() const {
  if (nn < 1) throw std::invalid_argument("nn must be at least 1");
  if (!(field_x > 0.0) || !(field_y > 0.0)) throw std::invalid_argument("field must be positive");
  if (stop < Time{}) throw std::invalid_argument("stop must be non-negative");
  if (!(range >= 0.0)) throw std::invalid_argument("range must be non-negative");
  if (per_hop_delay < Time{}) throw std::invalid_argument("per_hop_delay must be non-negative");
  if (positions.size() != nn) throw std::invalid_argument("need exactly one position per node");
  const auto inside = [&](const Position& p) {
    return p.x >= 0.0 && p.x <= field_x && p.y >= 0.0 && p.y <= field_y;
  };
  for (const auto& p : positions) {
    if (!inside(p)) throw std::invalid_argument("position outside the field");
  }
  const auto valid_node = [&](NodeId n) { return n >= 0 && static_cast<std::uint32_t>(n) < nn; };
  for (const auto& m : motion) {
    if (!valid_node(m.node)) throw std::invalid_argument("motion references an unknown node");
    if (!(m.speed > 0.0)) throw std::invalid_argument("setdest speed must be positive");
    if (!inside(m.dest)) throw std::invalid_argument("setdest destination outside the field");
    if (m.at < Time{}) throw std::invalid_argument("motion time must be non-negative");
  }
  for (const auto& f : flows) {
    if (!valid_node(f.src) || !valid_node(f.dst)) {
      throw std::invalid_argument("flow references an unknown node");
    }
    if (f.src == f.dst) throw std::invalid_argument("flow source equals destination");
    if (!(f.rate > 0.0)) throw std::invalid_argument("flow rate must be positive");
    if (f.start < Time{} || f.stop < f.start || f.stop > stop) {
      throw std::invalid_argument("flow must satisfy 0 <= start <= stop <= simulation stop");
    }
  }
  aodv.validate();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::size_t line) : line_(line) {}

  double number(std::string_view tok, std::string_view what) const {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      fail("malformed number for " + std::string(what) + ": '" + std::string(tok) + "'");
    }
    return v;
  }

  std::uint64_t integer(std::string_view tok, std::string_view what) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      fail("malformed integer for " + std::string(what) + ": '" + std::string(tok) + "'");
    }
    return v;
  }

  bool flag(std::string_view tok, std::string_view what) const {
    const auto v = lower(tok);
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    fail("expected on/off for " + std::string(what) + ": '" + std::string(tok) + "'");
  }

  Time time(std::string_view tok, std::string_view what) const {
    const double v = number(tok, what);
    if (v < 0.0) fail(std::string(what) + " must be non-negative");
    return seconds(v);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ScenarioError(line_, what); }

 private:
  std::size_t line_;
};

}  // namespace

ScenarioConfig parse_scenario(std::string_view text) {
  ScenarioConfig cfg;
  std::map<NodeId, std::pair<Position, std::size_t>> positions;
  std::vector<std::pair<MotionEvent, std::size_t>> motion;
  struct FlowLine {
    FlowSpec flow;
    bool has_stop = false;
    std::size_t line = 0;
  };
  std::vector<FlowLine> flows;
  bool min_hello_set = false;
  bool max_hello_set = false;
  std::size_t nn_line = 0;

  std::string section;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    const Parser p(lineno);

    if (line.front() == '[') {
      if (line.back() != ']') p.fail("malformed section header");
      section = lower(trim(line.substr(1, line.size() - 2)));
      if (section != "options" && section != "positions" && section != "motion" &&
          section != "flows" && section != "aodv") {
        p.fail("unknown section [" + section + "]");
      }
      continue;
    }
    if (section.empty()) p.fail("content before any section header");

    if (section == "options" || section == "aodv") {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) p.fail("expected key = value");
      const auto key = lower(trim(line.substr(0, eq)));
      const auto value = trim(line.substr(eq + 1));
      if (value.empty()) p.fail("missing value for " + key);
      auto& a = cfg.aodv;
      if (section == "options") {
        if (key == "nn") {
          cfg.nn = static_cast<std::uint32_t>(p.integer(value, key));
          nn_line = lineno;
        } else if (key == "x") {
          cfg.field_x = p.number(value, key);
        } else if (key == "y") {
          cfg.field_y = p.number(value, key);
        } else if (key == "stop") {
          cfg.stop = p.time(value, key);
        } else if (key == "range") {
          cfg.range = p.number(value, key);
        } else if (key == "per_hop_delay") {
          cfg.per_hop_delay = p.time(value, key);
        } else if (key == "seed") {
          cfg.seed = p.integer(value, key);
        } else if (key == "hello") {
          a.hello_enabled = p.flag(value, key);
        } else if (key == "lld") {
          a.link_layer_detection = p.flag(value, key);
        } else {
          p.fail("unknown option '" + key + "'");
        }
      } else {
        if (key == "hello_interval") {
          a.hello_interval = p.number(value, key);
        } else if (key == "allowed_hello_loss") {
          a.allowed_hello_loss = static_cast<std::uint32_t>(p.integer(value, key));
        } else if (key == "minhellointerval" || key == "min_hello_interval") {
          a.min_hello_interval = p.number(value, key);
          min_hello_set = true;
        } else if (key == "maxhellointerval" || key == "max_hello_interval") {
          a.max_hello_interval = p.number(value, key);
          max_hello_set = true;
        } else if (key == "bcast_id_save") {
          a.bcast_id_save = p.number(value, key);
        } else if (key == "frequency") {
          a.frequency = p.number(value, key);
        } else if (key == "network_diameter") {
          a.network_diameter = static_cast<std::uint32_t>(p.integer(value, key));
        } else if (key == "rreq_retries") {
          a.rreq_retries = static_cast<std::uint32_t>(p.integer(value, key));
        } else if (key == "active_route_timeout") {
          a.active_route_timeout = p.number(value, key);
        } else if (key == "my_route_timeout") {
          a.my_route_timeout = p.number(value, key);
        } else if (key == "delete_period") {
          a.delete_period = p.number(value, key);
        } else if (key == "rev_route_life") {
          a.rev_route_life = p.number(value, key);
        } else if (key == "node_traversal_time") {
          a.node_traversal_time = p.number(value, key);
        } else if (key == "max_rreq_timeout") {
          a.max_rreq_timeout = p.number(value, key);
        } else if (key == "rqueue_capacity") {
          a.rqueue_capacity = static_cast<std::uint32_t>(p.integer(value, key));
        } else if (key == "rqueue_timeout") {
          a.rqueue_timeout = p.number(value, key);
        } else {
          p.fail("unknown AODV constant '" + key + "'");
        }
      }
      continue;
    }

    const auto tok = split_ws(line);
    if (section == "positions") {
      if (tok.size() != 3 && tok.size() != 4) p.fail("expected: <node> <x> <y> [z]");
      const auto node = static_cast<NodeId>(p.integer(tok[0], "node id"));
      const Position at{p.number(tok[1], "x"), p.number(tok[2], "y")};
      if (tok.size() == 4 && p.number(tok[3], "z") != 0.0) p.fail("z must be 0");
      if (positions.count(node)) p.fail("duplicate position for node " + std::to_string(node));
      positions[node] = {at, lineno};
    } else if (section == "motion") {
      if (tok.size() != 6 || tok[2] != "setdest") {
        p.fail("expected: <time> <node> setdest <x> <y> <speed>");
      }
      MotionEvent m;
      m.at = p.time(tok[0], "motion time");
      m.node = static_cast<NodeId>(p.integer(tok[1], "node id"));
      m.dest = {p.number(tok[3], "x"), p.number(tok[4], "y")};
      m.speed = p.number(tok[5], "speed");
      if (!(m.speed > 0.0)) p.fail("setdest speed must be positive");
      motion.emplace_back(m, lineno);
    } else if (section == "flows") {
      FlowLine fl;
      fl.line = lineno;
      bool has_src = false, has_dst = false, has_rate = false, has_start = false;
      for (const auto t : tok) {
        const auto eq = t.find('=');
        if (eq == std::string_view::npos) p.fail("expected key=value in flow, got '" + std::string(t) + "'");
        const auto key = lower(t.substr(0, eq));
        const auto value = t.substr(eq + 1);
        if (key == "src") {
          fl.flow.src = static_cast<NodeId>(p.integer(value, key));
          has_src = true;
        } else if (key == "dst") {
          fl.flow.dst = static_cast<NodeId>(p.integer(value, key));
          has_dst = true;
        } else if (key == "rate") {
          fl.flow.rate = p.number(value, key);
          if (!(fl.flow.rate > 0.0)) p.fail("flow rate must be positive");
          has_rate = true;
        } else if (key == "size") {
          fl.flow.payload = static_cast<std::uint32_t>(p.integer(value, key));
        } else if (key == "start") {
          fl.flow.start = p.time(value, key);
          has_start = true;
        } else if (key == "stop") {
          fl.flow.stop = p.time(value, key);
          fl.has_stop = true;
        } else {
          p.fail("unknown flow field '" + key + "'");
        }
      }
      if (!has_src || !has_dst || !has_rate || !has_start) {
        p.fail("flow needs src, dst, rate and start");
      }
      flows.push_back(fl);
    }
  }

  if (cfg.nn < 1) throw ScenarioError(nn_line, "nn must be at least 1");
  if (!(cfg.field_x > 0.0) || !(cfg.field_y > 0.0)) {
    throw ScenarioError(0, "field dimensions must be positive");
  }
  if (!min_hello_set) cfg.aodv.min_hello_interval = 0.75 * cfg.aodv.hello_interval;
  if (!max_hello_set) cfg.aodv.max_hello_interval = 1.25 * cfg.aodv.hello_interval;

  const auto check_node = [&](NodeId n, std::size_t line) {
    if (n < 0 || static_cast<std::uint32_t>(n) >= cfg.nn) {
      throw ScenarioError(line, "node " + std::to_string(n) + " out of range (nn = " +
                                    std::to_string(cfg.nn) + ")");
    }
  };
  const auto check_inside = [&](const Position& at, std::size_t line) {
    if (at.x < 0.0 || at.x > cfg.field_x || at.y < 0.0 || at.y > cfg.field_y) {
      throw ScenarioError(line, "position outside the field");
    }
  };

  cfg.positions.assign(cfg.nn, Position{});
  for (const auto& [node, entry] : positions) {
    check_node(node, entry.second);
    check_inside(entry.first, entry.second);
    cfg.positions[static_cast<std::size_t>(node)] = entry.first;
  }
  for (const auto& [m, line] : motion) {
    check_node(m.node, line);
    check_inside(m.dest, line);
    cfg.motion.push_back(m);
  }
  for (auto& fl : flows) {
    check_node(fl.flow.src, fl.line);
    check_node(fl.flow.dst, fl.line);
    if (fl.flow.src == fl.flow.dst) throw ScenarioError(fl.line, "flow source equals destination");
    if (!fl.has_stop) fl.flow.stop = cfg.stop;
    if (fl.flow.stop < fl.flow.start || fl.flow.stop > cfg.stop) {
      throw ScenarioError(fl.line, "flow must satisfy start <= stop <= simulation stop");
    }
    cfg.flows.push_back(fl.flow);
  }
  try {
    cfg.aodv.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(0, e.what());
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace aodvsim
