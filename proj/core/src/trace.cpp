#include "dynlist/trace.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dynlist/errors.hpp"

namespace dynlist {

namespace {

struct Record {
  Round round = 0;
  bool barrier = false;
  EdgeChange change;
};

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "trace line " << line_no << ": " << what;
  throw TraceFormatError(msg.str());
}

template <class OnRecord, class OnHeader>
void parse(std::istream& is, OnRecord&& on_record, OnHeader&& on_header) {
  std::string line;
  std::size_t line_no = 0;
  Round last = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      on_header(line.substr(first + 1));
      continue;
    }
    std::istringstream fields(line);
    long long round = 0;
    std::string op;
    if (!(fields >> round >> op)) fail(line_no, "expected '<round> <op> ...'");
    if (round < 1) fail(line_no, "round numbers start at 1");
    if (round < last) fail(line_no, "round numbers must be non-decreasing");
    last = round;

    Record rec;
    rec.round = round;
    if (op == "STABILIZE") {
      rec.barrier = true;
    } else if (op == "I" || op == "D") {
      long long u = -1;
      long long v = -1;
      if (!(fields >> u >> v) || u < 0 || v < 0) fail(line_no, "expected two node ids");
      if (u == v) fail(line_no, "self-loop");
      rec.change = {Edge(static_cast<NodeId>(u), static_cast<NodeId>(v)),
                    op == "I" ? ChangeKind::Insert : ChangeKind::Delete};
    } else {
      fail(line_no, "unknown op '" + op + "'");
    }
    std::string extra;
    if (fields >> extra) fail(line_no, "trailing fields");
    on_record(rec, line_no);
  }
}

}  // namespace

void write_events(std::ostream& os, std::span<const TopologyEvent> events) {
  for (const auto& ev : events) {
    os << ev.round << ' ' << change_code(ev.kind) << ' ' << ev.edge.a() << ' ' << ev.edge.b()
       << '\n';
  }
}

std::vector<TopologyEvent> read_events(std::istream& is) {
  std::vector<TopologyEvent> out;
  parse(
      is,
      [&](const Record& rec, std::size_t line_no) {
        if (rec.barrier) fail(line_no, "STABILIZE is only valid in scenario traces");
        out.push_back({rec.round, rec.change.edge, rec.change.kind});
      },
      [](const std::string&) {});
  return out;
}

void write_scenario(std::ostream& os, const Scenario& scenario) {
  os << "# n=" << scenario.n << '\n';
  if (!scenario.description.empty()) os << "# " << scenario.description << '\n';
  Round r = 1;
  for (const auto& slot : scenario.slots) {
    if (slot.stabilize_before) os << r << " STABILIZE\n";
    for (const auto& c : slot.changes)
      os << r << ' ' << change_code(c.kind) << ' ' << c.edge.a() << ' ' << c.edge.b() << '\n';
    ++r;
  }
  // Trailing empty slots carry no records; keep the schedule length.
  if (!scenario.slots.empty() && scenario.slots.back().changes.empty() &&
      !scenario.slots.back().stabilize_before)
    os << "# rounds=" << scenario.slots.size() << '\n';
}

Scenario read_scenario(std::istream& is, std::size_t min_nodes) {
  Scenario s;
  std::size_t max_id_plus_one = 0;
  std::size_t header_n = 0;
  std::size_t header_rounds = 0;
  parse(
      is,
      [&](const Record& rec, std::size_t) {
        const auto idx = static_cast<std::size_t>(rec.round - 1);
        if (s.slots.size() <= idx) s.slots.resize(idx + 1);
        if (rec.barrier) {
          s.slots[idx].stabilize_before = true;
        } else {
          s.slots[idx].changes.push_back(rec.change);
          max_id_plus_one = std::max<std::size_t>(max_id_plus_one, rec.change.edge.b() + 1);
        }
      },
      [&](const std::string& header) {
        std::istringstream h(header);
        std::string token;
        h >> token;
        if (token.rfind("n=", 0) == 0) header_n = std::stoul(token.substr(2));
        if (token.rfind("rounds=", 0) == 0) header_rounds = std::stoul(token.substr(7));
      });
  s.n = std::max({min_nodes, max_id_plus_one, header_n});
  if (s.slots.size() < header_rounds) s.slots.resize(header_rounds);
  s.description = "trace";
  try {
    validate(s);
  } catch (const InvalidEvent& e) {
    throw TraceFormatError(std::string("invalid event sequence: ") + e.what());
  }
  return s;
}

}  // namespace dynlist
