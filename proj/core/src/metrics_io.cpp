#include "dynlist/metrics_io.hpp"

#include <iomanip>
#include <ostream>

#include "json.hpp"

namespace dynlist {

using nlohmann::json;

namespace {

json edge_json(const Edge& e) { return json::array({e.a(), e.b()}); }

json item_json(const Item& item) {
  return std::visit(
      [](const auto& it) -> json {
        using T = std::decay_t<decltype(it)>;
        if constexpr (std::is_same_v<T, EdgeUpdate>) {
          return {{"type", "edge"}, {"edge", edge_json(it.edge)},
                  {"op", std::string(1, change_code(it.kind))}};
        } else if constexpr (std::is_same_v<T, PairUpdate>) {
          return {{"type", "pair"}, {"edge", edge_json(it.edge)},
                  {"op", std::string(1, change_code(it.kind))}};
        } else if constexpr (std::is_same_v<T, PathInsert>) {
          json nodes = json::array();
          for (std::size_t i = 0; i < it.path.node_count(); ++i) nodes.push_back(it.path[i]);
          return {{"type", "path"}, {"nodes", nodes}};
        } else if constexpr (std::is_same_v<T, PathDelete>) {
          json nodes = json::array();
          for (std::size_t i = 0; i < it.path.node_count(); ++i) nodes.push_back(it.path[i]);
          return {{"type", "path-delete"}, {"nodes", nodes}};
        } else {
          return {{"type", "snapshot"}, {"owner", it.owner}, {"index", it.index},
                  {"bits", it.bits.size()}};
        }
      },
      item);
}

}  // namespace

void write_metrics_json(std::ostream& os, const RunResult& result) {
  const Metrics& m = result.metrics;
  json j;
  j["schema_version"] = kMetricsSchemaVersion;
  j["algorithm"] = result.algorithm;
  j["scenario"] = result.scenario;
  j["seed"] = result.seed;
  j["n"] = m.n;
  j["rounds"] = m.rounds;
  j["topology_changes"] = m.topology_changes;
  j["inconsistent_rounds"] = m.inconsistent_rounds;
  j["messages"] = m.messages;
  j["bits"] = m.bits;
  j["max_message_bits"] = m.max_message_bits;
  j["max_snapshot_message_bits"] = m.max_snapshot_message_bits;
  j["max_plain_message_bits"] = m.max_plain_message_bits;
  j["bandwidth_bits"] = m.bandwidth_bits;
  j["max_ratio"] = m.max_ratio();
  j["liveness_violations"] = m.liveness_violations();
  json barriers = json::array();
  for (const auto& b : m.barriers)
    barriers.push_back({{"after_round", b.started_after},
                        {"pending", b.pending_at_start},
                        {"bound", b.bound},
                        {"rounds", b.rounds}});
  j["barriers"] = barriers;
  j["ratio_series"] = m.ratio_series;
  if (result.verify) {
    const auto& v = *result.verify;
    json samples = json::array();
    for (const auto& s : v.samples)
      samples.push_back({{"round", s.round}, {"node", s.node}, {"what", s.what}});
    j["verify"] = {{"rounds_checked", v.rounds_checked},
                   {"consistent_node_checks", v.consistent_node_checks},
                   {"query_checks", v.query_checks},
                   {"cycle_checks", v.cycle_checks},
                   {"non_cycle_checks", v.non_cycle_checks},
                   {"mismatches", v.mismatches},
                   {"samples", samples}};
  }
  os << j.dump(2) << '\n';
}

void write_rounds_csv(std::ostream& os, const Metrics& m) {
  os << "round,changes,inconsistent_rounds,ratio\n";
  for (std::size_t i = 0; i < m.ratio_series.size(); ++i) {
    os << (i + 1) << ',' << m.changes_series[i] << ',' << m.inconsistent_series[i] << ','
       << std::setprecision(17) << m.ratio_series[i] << '\n';
  }
}

void write_trace_jsonl(std::ostream& os, std::span<const RoundTrace> traces) {
  for (const auto& t : traces) {
    json j;
    j["round"] = t.round;
    j["barrier"] = t.barrier;
    json events = json::array();
    for (const auto& e : t.events)
      events.push_back({std::string(1, change_code(e.kind)), e.edge.a(), e.edge.b()});
    j["events"] = events;
    json inds = json::array();
    for (std::size_t v = 0; v < t.indications.size(); ++v)
      for (const auto& ind : t.indications[v])
        inds.push_back({v, std::string(1, change_code(ind.kind)), ind.edge.a(), ind.edge.b()});
    j["indications"] = inds;
    json msgs = json::array();
    for (const auto& s : t.messages) {
      json mj = {{"from", s.from}, {"to", s.to}, {"bits", s.bits},
                 {"is_empty", s.msg.is_empty},
                 {"are_neighbors_empty", s.msg.are_neighbors_empty}};
      if (s.msg.item) mj["item"] = item_json(*s.msg.item);
      msgs.push_back(std::move(mj));
    }
    j["messages"] = msgs;
    json flags = json::array();
    for (bool c : t.consistent) flags.push_back(c);
    j["consistent"] = flags;
    os << j.dump() << '\n';
  }
}

void write_bench_header(std::ostream& os) {
  os << "algorithm,scenario,n,seed,status,rounds,topology_changes,inconsistent_rounds,"
        "max_ratio,messages,bits,wall_ms\n";
}

void write_bench_row(std::ostream& os, const BenchRow& r) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  os << r.algorithm << ',' << quoted(r.scenario) << ',' << r.n << ',' << r.seed << ','
     << r.status << ',' << r.rounds << ',' << r.topology_changes << ',' << r.inconsistent_rounds
     << ',' << std::setprecision(6) << r.max_ratio << ',' << r.messages << ',' << r.bits << ','
     << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat << '\n';
}

}  // namespace dynlist
