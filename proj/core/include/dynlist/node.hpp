#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "dynlist/message.hpp"
#include "dynlist/types.hpp"

namespace dynlist {

enum class QueryResult : std::uint8_t { True, False, Inconsistent };

[[nodiscard]] constexpr std::string_view to_string(QueryResult r) noexcept {
  switch (r) {
    case QueryResult::True: return "true";
    case QueryResult::False: return "false";
    case QueryResult::Inconsistent: return "inconsistent";
  }
  return "?";
}

struct EdgeQuery {
  Edge edge;
};

/// Clique membership; three nodes ask for a triangle.
struct CliqueQuery {
  std::vector<NodeId> nodes;
};

/// Cycle candidate as a cyclic node sequence of length 4 or 5.
struct CycleQuery {
  std::vector<NodeId> nodes;
};

using Query = std::variant<EdgeQuery, CliqueQuery, CycleQuery>;

/// A message together with its peer: the sender on receipt, the
/// destination on send.
struct Envelope {
  NodeId peer = 0;
  Message msg;
};

/// One node's share of a distributed data structure. The engine calls, per
/// round: on_topology, select_outgoing, on_receive. Queries never mutate.
class NodeProcess {
 public:
  explicit NodeProcess(NodeId id, std::size_t n) : id_(id), n_(n) {}
  virtual ~NodeProcess() = default;

  NodeProcess(const NodeProcess&) = delete;
  NodeProcess& operator=(const NodeProcess&) = delete;

  [[nodiscard]] NodeId id() const noexcept { return id_; }
  [[nodiscard]] std::size_t network_size() const noexcept { return n_; }

  /// Indications for this round, deletions first.
  virtual void on_topology(std::span<const Indication> indications) = 0;

  /// First half-round. At most one message per neighbor; messages that are
  /// trivial (no item, all flags true) are omitted.
  virtual std::vector<Envelope> select_outgoing() = 0;

  /// Second half-round. `inbox` is sorted by sender and holds only messages
  /// that crossed a present edge.
  virtual void on_receive(std::span<const Envelope> inbox) = 0;

  [[nodiscard]] virtual bool is_consistent() const = 0;

  /// Throws QueryError for queries the node does not own or the algorithm
  /// does not answer.
  [[nodiscard]] virtual QueryResult query(const Query& q) const = 0;

  /// Items waiting in this node's queues.
  [[nodiscard]] virtual std::size_t pending_items() const = 0;

  /// The edge set queries read (regardless of the consistency flag).
  [[nodiscard]] virtual std::vector<Edge> known_edges() const = 0;

 protected:
  /// Throws QueryError unless this node is in `nodes`.
  void require_member(std::span<const NodeId> nodes) const;

 private:
  NodeId id_;
  std::size_t n_;
};

}  // namespace dynlist
