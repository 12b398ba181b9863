#include "dsd/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "dsd/error.hpp"

namespace dsd {

struct FlowAccess {
  static std::vector<std::vector<std::size_t>>& out(FlowNetwork& n) { return n.out_; }
  static std::vector<FlowNetwork::Arc>& arcs(FlowNetwork& n) { return n.arcs_; }
};

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, capacity_t capacity) {
  if (capacity < 0) throw PreconditionError("negative arc capacity");
  if (from >= out_.size() || to >= out_.size()) throw PreconditionError("arc endpoint out of range");
  const std::size_t id = arcs_.size();
  arcs_.push_back({to, capacity, capacity});
  arcs_.push_back({from, 0, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

void FlowNetwork::set_capacity(std::size_t index, capacity_t capacity) {
  if (capacity < 0) throw PreconditionError("negative arc capacity");
  arcs_[index].capacity = capacity;
}

void FlowNetwork::reset() {
  for (std::size_t id = 0; id < arcs_.size(); id += 2) {
    arcs_[id].residual = arcs_[id].capacity;
    arcs_[id + 1].residual = 0;
  }
}

namespace {

class Dinic {
 public:
  Dinic(FlowNetwork& net, std::size_t source, std::size_t sink)
      : out_(FlowAccess::out(net)),
        arcs_(FlowAccess::arcs(net)),
        source_(source),
        sink_(sink),
        level_(out_.size()),
        next_(out_.size()) {}

  FlowNetwork::capacity_t run() {
    FlowNetwork::capacity_t total = 0;
    while (build_levels()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (auto pushed = augment()) total += pushed;
    }
    return total;
  }

  std::vector<bool> reachable() const {
    std::vector<bool> seen(out_.size(), false);
    std::vector<std::size_t> stack{source_};
    seen[source_] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto id : out_[v]) {
        const auto& a = arcs_[id];
        if (a.residual > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source_] = 0;
    q.push(source_);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto id : out_[v]) {
        const auto& a = arcs_[id];
        if (a.residual > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  // One augmenting path in the level graph, found iteratively so that long
  // paths do not exhaust the stack. Dead ends advance next_.
  FlowNetwork::capacity_t augment() {
    path_.clear();
    std::size_t v = source_;
    while (true) {
      if (v == sink_) {
        auto bottleneck = std::numeric_limits<FlowNetwork::capacity_t>::max();
        for (auto id : path_) bottleneck = std::min(bottleneck, arcs_[id].residual);
        for (auto id : path_) {
          arcs_[id].residual -= bottleneck;
          arcs_[id ^ 1].residual += bottleneck;
        }
        return bottleneck;
      }
      bool advanced = false;
      for (auto& i = next_[v]; i < out_[v].size(); ++i) {
        const auto id = out_[v][i];
        const auto& a = arcs_[id];
        if (a.residual > 0 && level_[a.to] == level_[v] + 1) {
          path_.push_back(id);
          v = a.to;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (v == source_) return 0;
      level_[v] = -1;  // prune dead end
      const auto back = path_.back();
      path_.pop_back();
      v = arcs_[back ^ 1].to;
      ++next_[v];
    }
  }

  std::vector<std::vector<std::size_t>>& out_;
  std::vector<FlowNetwork::Arc>& arcs_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> path_;
};

}  // namespace

MaxFlowResult max_flow(FlowNetwork& network, std::size_t source, std::size_t sink) {
  if (source == sink) throw PreconditionError("source and sink coincide");
  if (source >= network.num_nodes() || sink >= network.num_nodes()) {
    throw PreconditionError("terminal out of range");
  }
  Dinic dinic(network, source, sink);
  MaxFlowResult result;
  result.value = dinic.run();
  result.source_side = dinic.reachable();
  return result;
}

FlowNetwork::capacity_t cut_capacity(const FlowNetwork& network, const std::vector<bool>& side) {
  FlowNetwork::capacity_t total = 0;
  for (std::size_t id = 0; id < 2 * network.num_arcs(); id += 2) {
    if (side[network.tail(id)] && !side[network.arc(id).to]) total += network.arc(id).capacity;
  }
  return total;
}

}  // namespace dsd
