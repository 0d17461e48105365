#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dynlist/run.hpp"

namespace dynlist {

/// Version of the metrics JSON layout written by write_metrics_json.
inline constexpr int kMetricsSchemaVersion = 1;

/// Counters, barrier records, ratio series and (if present) the verify
/// report. Contains no wall-clock data, so equal runs give equal bytes.
void write_metrics_json(std::ostream& os, const RunResult& result);

/// One row per round: round,changes,inconsistent_rounds,ratio (cumulative).
void write_rounds_csv(std::ostream& os, const Metrics& metrics);

/// One JSON object per round.
void write_trace_jsonl(std::ostream& os, std::span<const RoundTrace> traces);

struct BenchRow {
  std::string algorithm;
  std::string scenario;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string status;  // "ok" or the error class
  std::size_t rounds = 0;
  std::size_t topology_changes = 0;
  std::size_t inconsistent_rounds = 0;
  double max_ratio = 0.0;
  std::size_t messages = 0;
  std::size_t bits = 0;
  double wall_ms = 0.0;
};

void write_bench_header(std::ostream& os);
void write_bench_row(std::ostream& os, const BenchRow& row);

}  // namespace dynlist
