#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hiadmm/common.hpp"
#include "hiadmm/network.hpp"

namespace hiadmm {

// Undirected graph over dense node indices 0..n-1. Parallel branches in a
// case collapse to a single edge here.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::vector<std::pair<int, int>> edge_list = {}) : adj_(n) {
    for (auto [u, v] : edge_list) add_edge(u, v);
  }

  void add_edge(int u, int v) {
    if (u == v) throw ArgumentError("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= size() || v >= size())
      throw ArgumentError("edge endpoint out of range");
    if (insert_sorted(adj_[u], v)) {
      insert_sorted(adj_[v], u);
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
  }

  int size() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Open neighborhood, sorted ascending.
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }

  // Unique edges as (min, max) pairs in insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  bool connected() const {
    if (size() == 0) return true;
    std::vector<char> seen(size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    return count == size();
  }

  // Induced subgraph on `nodes` (dense re-indexing in the order given),
  // plus the map from new index to old index.
  Graph induced(const std::vector<int>& nodes) const {
    std::vector<int> local(size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(nodes.size()));
    for (auto [u, v] : edges_)
      if (local[u] >= 0 && local[v] >= 0) sub.add_edge(local[u], local[v]);
    return sub;
  }

 private:
  static bool insert_sorted(std::vector<int>& list, int v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) return false;
    list.insert(it, v);
    return true;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

inline Graph graph_from_case(const NetworkCase& net) {
  Graph g(net.num_buses());
  for (const Branch& br : net.branches)
    g.add_edge(net.bus_index(br.from_bus), net.bus_index(br.to_bus));
  return g;
}

}  // namespace hiadmm
