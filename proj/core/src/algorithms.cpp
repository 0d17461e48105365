#include "dynlist/algorithms.hpp"

#include <array>

#include "dynlist/naive2hop.hpp"
#include "dynlist/robust2hop.hpp"
#include "dynlist/robust3hop.hpp"
#include "dynlist/triangle.hpp"

namespace dynlist {

namespace {

constexpr std::array<std::pair<AlgorithmKind, std::string_view>, 6> kAlgorithms{{
    {AlgorithmKind::Robust2Hop, "robust2hop"},
    {AlgorithmKind::Triangle, "triangle"},
    {AlgorithmKind::Clique, "clique"},
    {AlgorithmKind::Robust3Hop, "robust3hop"},
    {AlgorithmKind::Cycles45, "cycles45"},
    {AlgorithmKind::Naive2Hop, "naive2hop"},
}};

constexpr std::array<std::pair<Fault, std::string_view>, 4> kFaults{{
    {Fault::None, "none"},
    {Fault::IgnoreTimestampClause, "ignore-timestamp"},
    {Fault::SkipNeighborRemoval, "skip-removal"},
    {Fault::NoPatternBDeletions, "no-pattern-b-deletions"},
}};

}  // namespace

std::string_view algorithm_name(AlgorithmKind kind) noexcept {
  for (const auto& [k, name] : kAlgorithms)
    if (k == kind) return name;
  return "?";
}

std::optional<AlgorithmKind> parse_algorithm(std::string_view name) noexcept {
  for (const auto& [k, n] : kAlgorithms)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<AlgorithmKind>& all_algorithms() noexcept {
  static const std::vector<AlgorithmKind> all = [] {
    std::vector<AlgorithmKind> v;
    for (const auto& [k, name] : kAlgorithms) v.push_back(k);
    return v;
  }();
  return all;
}

std::string_view fault_name(Fault f) noexcept {
  for (const auto& [k, name] : kFaults)
    if (k == f) return name;
  return "?";
}

std::optional<Fault> parse_fault(std::string_view name) noexcept {
  for (const auto& [k, n] : kFaults)
    if (n == name) return k;
  return std::nullopt;
}

std::unique_ptr<NodeProcess> make_node(const AlgorithmConfig& config, NodeId id, std::size_t n,
                                       const GraphState* clock) {
  TimestampedOptions ts;
  ts.faults.ignore_timestamp_clause = config.fault == Fault::IgnoreTimestampClause;
  ts.faults.skip_neighbor_removal = config.fault == Fault::SkipNeighborRemoval;
  if (config.ideal_timestamps) ts.ideal_clock = clock;
  switch (config.kind) {
    case AlgorithmKind::Robust2Hop:
      return std::make_unique<Robust2HopNode>(id, n, ts);
    case AlgorithmKind::Triangle:
    case AlgorithmKind::Clique: {
      TriangleOptions opt;
      opt.base = ts;
      opt.pattern_b_deletions = config.fault != Fault::NoPatternBDeletions;
      return std::make_unique<TriangleNode>(id, n, opt);
    }
    case AlgorithmKind::Robust3Hop:
    case AlgorithmKind::Cycles45:
      return std::make_unique<Robust3HopNode>(id, n);
    case AlgorithmKind::Naive2Hop:
      return std::make_unique<Naive2HopNode>(id, n, config.naive_payload_bits);
  }
  return nullptr;
}

std::size_t bandwidth_budget(const AlgorithmConfig& config, std::size_t n) {
  if (config.kind == AlgorithmKind::Naive2Hop) {
    const std::size_t b = config.naive_payload_bits == 0 ? id_bits(n) : config.naive_payload_bits;
    return naive_bandwidth(n, b);
  }
  return default_bandwidth(n);
}

}  // namespace dynlist
