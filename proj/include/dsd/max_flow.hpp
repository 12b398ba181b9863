#pragma once

#include <cstdint>
#include <vector>

namespace dsd {

/// Directed network with integer capacities. Arcs are stored in pairs
/// (forward, reverse) so `arc ^ 1` is the residual twin.
class FlowNetwork {
 public:
  using capacity_t = std::int64_t;

  struct Arc {
    std::size_t to;
    capacity_t capacity;  // original capacity
    capacity_t residual;
  };

  explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

  /// Returns the index of the forward arc. Throws PreconditionError for a
  /// negative capacity or an out-of-range node.
  std::size_t add_arc(std::size_t from, std::size_t to, capacity_t capacity);

  std::size_t num_nodes() const noexcept { return out_.size(); }
  std::size_t num_arcs() const noexcept { return arcs_.size() / 2; }

  const Arc& arc(std::size_t index) const { return arcs_[index]; }
  std::size_t tail(std::size_t index) const { return arcs_[index ^ 1].to; }
  capacity_t flow(std::size_t index) const { return arcs_[index].capacity - arcs_[index].residual; }

  /// Changes an arc's original capacity; takes effect at the next reset().
  void set_capacity(std::size_t index, capacity_t capacity);

  /// Restores every residual capacity to the original.
  void reset();

 private:
  friend struct FlowAccess;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<Arc> arcs_;
};

struct MaxFlowResult {
  FlowNetwork::capacity_t value = 0;
  /// Nodes reachable from the source in the final residual network; this is
  /// the source side of the minimal minimum cut.
  std::vector<bool> source_side;
};

/// Exact maximum flow by blocking flows on BFS level graphs (Dinic).
MaxFlowResult max_flow(FlowNetwork& network, std::size_t source, std::size_t sink);

/// Sum of original capacities of forward arcs leaving `side`.
FlowNetwork::capacity_t cut_capacity(const FlowNetwork& network, const std::vector<bool>& side);

}  // namespace dsd
