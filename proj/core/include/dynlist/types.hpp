#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace dynlist {

using NodeId = std::uint32_t;

/// Round number. Insertion times use -1 for "never inserted".
using Round = std::int64_t;

inline constexpr Round kNeverInserted = -1;

/// Undirected edge stored canonically with a < b.
class Edge {
 public:
  constexpr Edge() = default;

  /// Canonicalizes the pair. Throws InvalidEvent on a self-loop.
  Edge(NodeId x, NodeId y);

  [[nodiscard]] constexpr NodeId a() const noexcept { return a_; }
  [[nodiscard]] constexpr NodeId b() const noexcept { return b_; }

  [[nodiscard]] constexpr bool contains(NodeId v) const noexcept {
    return v == a_ || v == b_;
  }

  /// The endpoint that is not `v`. `v` must be an endpoint.
  [[nodiscard]] constexpr NodeId other(NodeId v) const noexcept {
    return v == a_ ? b_ : a_;
  }

  [[nodiscard]] constexpr bool touches(const Edge& e) const noexcept {
    return contains(e.a_) || contains(e.b_);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

 private:
  NodeId a_ = 0;
  NodeId b_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

enum class ChangeKind : std::uint8_t { Insert, Delete };

[[nodiscard]] constexpr char change_code(ChangeKind k) noexcept {
  return k == ChangeKind::Insert ? 'I' : 'D';
}

/// A change requested by a scenario, before it is bound to a round.
struct EdgeChange {
  Edge edge;
  ChangeKind kind = ChangeKind::Insert;

  friend auto operator<=>(const EdgeChange&, const EdgeChange&) = default;
};

/// The adversary's unit of change.
struct TopologyEvent {
  Round round = 0;
  Edge edge;
  ChangeKind kind = ChangeKind::Insert;

  friend auto operator<=>(const TopologyEvent&, const TopologyEvent&) = default;
};

/// What a node is told locally about a change on one of its incident edges.
/// `inserted_at` is the edge's insertion round: the current round for an
/// insertion, the latest insertion round of the removed edge for a deletion.
struct Indication {
  Edge edge;
  ChangeKind kind = ChangeKind::Insert;
  Round round = 0;
  Round inserted_at = kNeverInserted;
  NodeId neighbor = 0;
};

/// ceil(log2(n)), at least 1. Bit width of one node identifier.
[[nodiscard]] constexpr std::size_t id_bits(std::size_t n) noexcept {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits == 0 ? 1 : bits;
}

}  // namespace dynlist

template <>
struct std::hash<dynlist::Edge> {
  std::size_t operator()(const dynlist::Edge& e) const noexcept {
    return (static_cast<std::size_t>(e.a()) << 32) ^ e.b();
  }
};
