#include "domlab/random.hpp"

#include <algorithm>
#include <numeric>

namespace domlab {

namespace {
int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }
}  // namespace

Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng, p)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_connected_bipartite(int n, double p, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const int a = uniform(rng, 1, n - 1);
  std::vector<int> side_a(perm.begin(), perm.begin() + a);
  std::vector<int> side_b(perm.begin() + a, perm.end());

  Graph g(n);
  // Grow a spanning tree by attaching each new vertex to a placed vertex of
  // the opposite side.
  std::vector<int> placed_a{side_a[0]};
  std::vector<int> placed_b;
  std::size_t ia = 1;
  std::size_t ib = 0;
  while (ia < side_a.size() || ib < side_b.size()) {
    const bool take_b = ib < side_b.size() && (ia == side_a.size() || placed_b.empty() || coin(rng, 0.5));
    if (take_b) {
      const int v = side_b[ib++];
      g.add_edge(v, placed_a[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(placed_a.size()) - 1))]);
      placed_b.push_back(v);
    } else {
      const int v = side_a[ia++];
      g.add_edge(v, placed_b[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(placed_b.size()) - 1))]);
      placed_a.push_back(v);
    }
  }
  for (int x : side_a) {
    for (int y : side_b) {
      if (!g.adjacent(x, y) && coin(rng, p)) g.add_edge(x, y);
    }
  }
  return g;
}

Graph random_relabel(const Graph& g, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return g.relabeled(order);
}

Hypergraph random_hypergraph(int points, int edges, double p, Rng& rng) {
  std::vector<VertexSet> es(static_cast<std::size_t>(edges));
  for (auto& e : es) {
    for (int x = 0; x < points; ++x) {
      if (coin(rng, p)) e.set(x);
    }
    if (e.empty()) e.set(uniform(rng, 0, points - 1));
  }
  for (int x = 0; x < points; ++x) {
    bool covered = false;
    for (const auto& e : es) covered = covered || e.test(x);
    if (!covered) es[static_cast<std::size_t>(uniform(rng, 0, edges - 1))].set(x);
  }
  return Hypergraph(points, std::move(es));
}

}  // namespace domlab
