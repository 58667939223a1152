#include <algorithm>
#include <charconv>

#include "domlab/extremal.hpp"

namespace domlab {

std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  VertexSet assigned;
  std::vector<int> parts;
  for (int v = 0; v < n; ++v) {
    if (assigned.test(v)) continue;
    const VertexSet part = all - g.neighbors(v);
    for (int u : part) {
      if (all - g.neighbors(u) != part) return std::nullopt;
    }
    assigned |= part;
    parts.push_back(part.count());
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

Graph knn_minus_matching(int n) {
  if (n < 2) throw PreconditionError("K_{n,n} - M needs n >= 2");
  if (2 * n > Graph::kMaxOrder) throw PreconditionError("K_{n,n} - M exceeds 256 vertices");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) g.add_edge(i, n + j);
    }
  }
  return g;
}

bool recognize_knn_minus_matching(const Graph& g) {
  const auto b = bipartition(g);
  if (!b) return false;
  const int n = b->side_a.count();
  if (n < 2 || b->side_b.count() != n) return false;
  VertexSet matched;
  for (int a : b->side_a) {
    if (g.degree(a) != n - 1) return false;
    const VertexSet missing = b->side_b - g.neighbors(a);
    if (missing.count() != 1 || matched.intersects(missing)) return false;
    matched |= missing;
  }
  for (int v : b->side_b) {
    if (g.degree(v) != n - 1) return false;
  }
  return matched == b->side_b;
}

std::pair<Graph, Bipartition> graph_from_oa(const OrthogonalArray& a) {
  if (const Check c = validate_oa(a); !c) throw PreconditionError("invalid orthogonal array: " + c.reason);
  const int q = a.symbols;
  const int k = a.columns;
  if (k != q + 1) throw PreconditionError("graph_from_oa needs an OA(q+1, q)");
  const int n = k * k - k + 1;
  if (2 * n > Graph::kMaxOrder) throw PreconditionError("construction exceeds 256 vertices");
  const int b_star = 2 * n - 1;
  auto class_vertex = [&](int s, int x) { return n + s * (k - 1) + x; };

  Graph g(2 * n);
  for (int i = 0; i < k; ++i) {
    for (int s = 0; s < k; ++s) {
      if (s == i) continue;
      for (int x = 0; x < k - 1; ++x) g.add_edge(i, class_vertex(s, x));
    }
  }
  for (int r = 0; r < q * q; ++r) {
    const int v = k + r;
    g.add_edge(v, b_star);
    for (int s = 0; s < k; ++s) {
      for (int x = 0; x < k - 1; ++x) {
        if (x != a.rows[r][s]) g.add_edge(v, class_vertex(s, x));
      }
    }
  }
  Bipartition b{VertexSet::range(n), VertexSet::range(2 * n) - VertexSet::range(n)};
  return {std::move(g), b};
}

OrthogonalArray standard_oa(int q) { return mols_to_oa(mols_family(q)); }

Graph fig1_graph() {
  static constexpr int kTop[7][4] = {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}, {1, 3, 5, 6},
                                     {1, 2, 4, 6}, {0, 3, 4, 6}, {0, 2, 5, 6}};
  Graph g(14);
  for (int t = 0; t < 7; ++t) {
    for (int b : kTop[t]) g.add_edge(t, 7 + b);
  }
  return g;
}

namespace {

int parse_parameter(std::string_view name, std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw PreconditionError("bad parameter in builtin \"" + std::string(name) + "\"");
  }
  return value;
}

}  // namespace

Graph builtin_graph(std::string_view name) {
  if (name == "fig1") return fig1_graph();
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view family = name.substr(0, colon);
    const int param = parse_parameter(name, name.substr(colon + 1));
    if (family == "knn-m") return knn_minus_matching(param);
    if (family == "oa-graph") return graph_from_oa(standard_oa(param)).first;
  }
  throw PreconditionError("unknown builtin graph \"" + std::string(name) +
                          "\" (expected fig1, knn-m:<n> or oa-graph:<q>)");
}

}  // namespace domlab
