#include "dynlist/message.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace dynlist {

Path::Path(std::initializer_list<NodeId> nodes) {
  if (nodes.size() > kMaxNodes) throw std::invalid_argument("path too long");
  for (NodeId x : nodes) nodes_[size_++] = x;
}

bool Path::contains_node(NodeId x) const noexcept {
  return std::find(nodes_.begin(), nodes_.begin() + size_, x) != nodes_.begin() + size_;
}

bool Path::contains_edge(const Edge& e) const noexcept {
  for (std::size_t i = 0; i + 1 < size_; ++i) {
    const NodeId x = nodes_[i];
    const NodeId y = nodes_[i + 1];
    if ((x == e.a() && y == e.b()) || (x == e.b() && y == e.a())) return true;
  }
  return false;
}

std::optional<Path> Path::prepend(NodeId x) const {
  if (size_ >= kMaxNodes || contains_node(x)) return std::nullopt;
  Path p;
  p.nodes_[0] = x;
  std::copy(nodes_.begin(), nodes_.begin() + size_, p.nodes_.begin() + 1);
  p.size_ = static_cast<std::uint8_t>(size_ + 1);
  return p;
}

Path Path::prefix(std::size_t edges) const {
  Path p = *this;
  p.size_ = static_cast<std::uint8_t>(std::min<std::size_t>(size_, edges + 1));
  return p;
}

bool Path::starts_with(const Path& q) const noexcept {
  if (q.size_ > size_) return false;
  return std::equal(q.nodes_.begin(), q.nodes_.begin() + q.size_, nodes_.begin());
}

std::ostream& operator<<(std::ostream& os, const Path& p) {
  for (std::size_t i = 0; i < p.node_count(); ++i) os << (i ? "-" : "") << p[i];
  return os;
}

std::size_t message_bits(const Message& m, std::size_t n) {
  const std::size_t id = id_bits(n);
  if (!m.item) return kHeaderBits;
  const std::size_t body = std::visit(
      [&](const auto& it) -> std::size_t {
        using T = std::decay_t<decltype(it)>;
        if constexpr (std::is_same_v<T, EdgeUpdate> || std::is_same_v<T, PairUpdate>) {
          return 2 * id + 1;  // insert/delete mark
        } else if constexpr (std::is_same_v<T, PathInsert> || std::is_same_v<T, PathDelete>) {
          return it.path.node_count() * id + 2;  // node count
        } else {
          return id + it.bits.size() + 1;  // owner, payload, first-chunk bit
        }
      },
      *m.item);
  return kHeaderBits + body;
}

}  // namespace dynlist
