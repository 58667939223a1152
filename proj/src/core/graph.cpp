#include "domlab/graph.hpp"

#include "domlab/errors.hpp"

namespace domlab {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw PreconditionError("graph order " + std::to_string(n) + " outside [0, 256]");
  }
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for order " + std::to_string(order()));
  }
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u].reset(v);
  adj_[v].reset(u);
}

Graph Graph::relabeled(std::span<const int> order) const {
  const int n = this->order();
  if (static_cast<int>(order.size()) != n) {
    throw PreconditionError("relabeling has wrong length");
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    if (v < 0 || v >= n || position[v] != -1) throw PreconditionError("relabeling is not a permutation");
    position[v] = i;
  }
  Graph out(n);
  for (int i = 0; i < n; ++i) {
    for (int u : adj_[order[i]]) out.adj_[i].set(position[u]);
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<int> index(adj_.size(), -1);
  int m = 0;
  for (int v : keep) {
    if (v < order()) index[v] = m++;
  }
  Graph out(m);
  for (int v : keep) {
    if (v >= order()) continue;
    for (int u : adj_[v] & keep) out.adj_[index[v]].set(index[u]);
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

}  // namespace domlab
