#pragma once

#include "domlab/graph.hpp"

namespace fixtures {

inline domlab::Graph path(int n) {
  domlab::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline domlab::Graph cycle(int n) {
  domlab::Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline domlab::Graph complete(int n) {
  domlab::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

/// Complete multipartite graph with the given part sizes, parts laid out
/// consecutively.
inline domlab::Graph multipartite(std::initializer_list<int> parts) {
  int n = 0;
  std::vector<int> part_of;
  int idx = 0;
  for (int p : parts) {
    for (int i = 0; i < p; ++i) part_of.push_back(idx);
    n += p;
    ++idx;
  }
  domlab::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

inline domlab::Graph star(int leaves) {
  domlab::Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace fixtures
