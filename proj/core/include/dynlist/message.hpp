#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "dynlist/types.hpp"

namespace dynlist {

/// Simple path of 0 to 3 edges, stored as its node sequence.
class Path {
 public:
  static constexpr std::size_t kMaxNodes = 4;

  constexpr Path() = default;
  Path(std::initializer_list<NodeId> nodes);

  [[nodiscard]] std::size_t node_count() const noexcept { return size_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return size_ == 0 ? 0 : size_ - 1; }
  [[nodiscard]] NodeId operator[](std::size_t i) const noexcept { return nodes_[i]; }
  [[nodiscard]] NodeId front() const noexcept { return nodes_[0]; }
  [[nodiscard]] NodeId back() const noexcept { return nodes_[size_ - 1]; }
  [[nodiscard]] Edge edge(std::size_t i) const { return Edge(nodes_[i], nodes_[i + 1]); }
  [[nodiscard]] Edge last_edge() const { return edge(edge_count() - 1); }

  [[nodiscard]] bool contains_node(NodeId x) const noexcept;
  [[nodiscard]] bool contains_edge(const Edge& e) const noexcept;

  /// Path with `x` in front. Returns nullopt if the result would repeat a
  /// node or exceed kMaxNodes.
  [[nodiscard]] std::optional<Path> prepend(NodeId x) const;

  /// The first `edges` edges.
  [[nodiscard]] Path prefix(std::size_t edges) const;
  [[nodiscard]] bool starts_with(const Path& q) const noexcept;

  friend auto operator<=>(const Path& x, const Path& y) noexcept {
    for (std::size_t i = 0; i < std::min(x.size_, y.size_); ++i)
      if (auto c = x.nodes_[i] <=> y.nodes_[i]; c != 0) return c;
    return x.size_ <=> y.size_;
  }
  friend bool operator==(const Path& x, const Path& y) noexcept { return (x <=> y) == 0; }

 private:
  std::array<NodeId, kMaxNodes> nodes_{};
  std::uint8_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Path& p);

// Wire items. Each algorithm uses a subset.

/// Edge change with pattern-(a) semantics (also the naive algorithm's
/// neighbor updates).
struct EdgeUpdate {
  Edge edge;
  ChangeKind kind = ChangeKind::Insert;
};

/// Pattern-(b) item: an incident edge of the sender, addressed to the third
/// vertex of a triangle.
struct PairUpdate {
  Edge edge;
  ChangeKind kind = ChangeKind::Insert;
};

struct PathInsert {
  Path path;
};

/// Withdraws every path of the sender that starts with `path`.
struct PathDelete {
  Path path;
};

/// One chunk of the sender's neighborhood bitmap. Chunk `index` covers node
/// ids [index * width, index * width + bits.size()).
struct SnapshotChunk {
  NodeId owner = 0;
  std::uint32_t index = 0;
  std::vector<bool> bits;
};

using Item = std::variant<EdgeUpdate, PairUpdate, PathInsert, PathDelete, SnapshotChunk>;

/// What travels over one directed edge in one round. A flag equal to true is
/// the default and costs nothing on the wire; a message with no item and
/// both flags true is never sent.
struct Message {
  std::optional<Item> item;
  bool is_empty = true;
  bool are_neighbors_empty = true;

  [[nodiscard]] bool trivial() const noexcept {
    return !item && is_empty && are_neighbors_empty;
  }
};

/// Fixed header: 3-bit item tag plus one bit per flag.
inline constexpr std::size_t kHeaderBits = 5;

/// Encoded size in bits for a network of n nodes. Node ids cost id_bits(n)
/// each; marks, hop counters and path lengths cost at most 3 more bits;
/// snapshot payloads count exactly.
[[nodiscard]] std::size_t message_bits(const Message& m, std::size_t n);

/// Default per-message budget: three node ids plus 8 bits.
[[nodiscard]] constexpr std::size_t default_bandwidth(std::size_t n) noexcept {
  return 3 * id_bits(n) + 8;
}

/// Budget for the naive algorithm with payload width `payload_bits`.
[[nodiscard]] constexpr std::size_t naive_bandwidth(std::size_t n,
                                                    std::size_t payload_bits) noexcept {
  return payload_bits + id_bits(n) + 8;
}

}  // namespace dynlist
