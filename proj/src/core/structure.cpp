#include <algorithm>
#include <functional>

#include "domlab/graph.hpp"
#include "domlab/kernels.hpp"

namespace domlab {

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? b.side_a : b.side_b).set(v);
  return b;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next = kernels::union_rows(g.rows(), frontier) - seen;
    seen |= next;
    frontier = next;
  }
  return seen.count() == n;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).empty()) return true;
  }
  return false;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

TwinPartition false_twin_partition(const Graph& g) {
  TwinPartition out;
  VertexSet assigned;
  for (int v = 0; v < g.order(); ++v) {
    if (assigned.test(v)) continue;
    VertexSet cls = kernels::equal_rows(g.rows(), g.neighbors(v));
    cls.set(v);
    assigned |= cls;
    out.classes.push_back(cls);
  }
  return out;
}

bool is_false_twin_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (kernels::equal_rows(g.rows(), g.neighbors(v)).count() > 1) return false;
  }
  return true;
}

Graph quotient_false_twins(const Graph& g) {
  VertexSet keep;
  for (const auto& cls : false_twin_partition(g).classes) keep.set(cls.first());
  return g.induced(keep);
}

ChordalResult is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering iff g is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  VertexSet done;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!done.test(v) && (pick == -1 || weight[v] > weight[pick])) pick = v;
    }
    done.set(pick);
    visit.push_back(pick);
    for (int u : g.neighbors(pick) - done) ++weight[u];
  }
  std::vector<int> order(visit.rbegin(), visit.rend());
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    VertexSet later;
    for (int u : g.neighbors(v)) {
      if (position[u] > i) later.set(u);
    }
    if (later.empty()) continue;
    int parent = -1;
    for (int u : later) {
      if (parent == -1 || position[u] < position[parent]) parent = u;
    }
    later.reset(parent);
    if (!later.subset_of(g.neighbors(parent))) return {false, std::nullopt};
  }
  return {true, std::move(order)};
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nv = g.neighbors(v);
    bool clique = true;
    for (int u : nv) {
      VertexSet rest = nv;
      rest.reset(u);
      if (!rest.subset_of(g.neighbors(u))) {
        clique = false;
        break;
      }
    }
    if (clique) out.set(v);
  }
  return out;
}

}  // namespace domlab
