#include "domlab/hypergraph.hpp"

#include <istream>
#include <sstream>

#include "domlab/detail/search.hpp"
#include "domlab/errors.hpp"
#include "domlab/kernels.hpp"

namespace domlab {

Hypergraph::Hypergraph(int points, std::vector<VertexSet> edges) : points_(points), edges_(std::move(edges)) {
  if (points_ < 0 || points_ > VertexSet::kCapacity) {
    throw PreconditionError("hypergraph point count outside [0, 256]");
  }
  if (edges_.size() > static_cast<std::size_t>(VertexSet::kCapacity)) {
    throw PreconditionError("hypergraph has more than 256 edges");
  }
  const VertexSet all = VertexSet::range(points_);
  VertexSet covered;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].empty()) throw PreconditionError("hyperedge " + std::to_string(e) + " is empty");
    if (!edges_[e].subset_of(all)) throw PreconditionError("hyperedge " + std::to_string(e) + " names a missing point");
    covered |= edges_[e];
  }
  if (covered != all) {
    throw PreconditionError("point " + std::to_string((all - covered).first()) + " lies in no hyperedge");
  }
}

std::vector<VertexSet> Hypergraph::incidences() const {
  std::vector<VertexSet> inc(static_cast<std::size_t>(points_));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (int p : edges_[e]) inc[p].set(static_cast<int>(e));
  }
  return inc;
}

HypergraphResult covering_number(const Hypergraph& h) {
  const auto cover = detail::min_set_cover(h.edges(), VertexSet::range(h.points()));
  return {cover.size, cover.rows};
}

HypergraphResult grundy_covering_number(const Hypergraph& h, std::size_t memo_cap) {
  const auto seq = detail::longest_legal_sequence(h.edges(), memo_cap);
  return {seq.length, seq.order};
}

HypergraphResult grundy_transversal_number(const Hypergraph& h, std::size_t memo_cap) {
  // Point v is playable iff some edge through v has not been hit yet; playing
  // it hits every edge through v. That is a legal sequence over the
  // incidence rows, with the hit edges as the covered set.
  const auto inc = h.incidences();
  const auto seq = detail::longest_legal_sequence(inc, memo_cap);
  return {seq.length, seq.order};
}

bool is_edge_cover(const Hypergraph& h, std::span<const int> edges) {
  VertexSet covered;
  for (int e : edges) {
    if (e < 0 || e >= h.edge_count()) return false;
    covered |= h.edges()[e];
  }
  return covered == VertexSet::range(h.points());
}

bool is_legal_edge_sequence(const Hypergraph& h, std::span<const int> edges) {
  VertexSet covered;
  VertexSet used;
  for (int e : edges) {
    if (e < 0 || e >= h.edge_count() || used.test(e)) return false;
    used.set(e);
    if (h.edges()[e].subset_of(covered)) return false;
    covered |= h.edges()[e];
  }
  return true;
}

bool is_legal_transversal_sequence(const Hypergraph& h, std::span<const int> points) {
  VertexSet played;
  for (int v : points) {
    if (v < 0 || v >= h.points() || played.test(v)) return false;
    bool witnessed = false;
    for (const auto& e : h.edges()) {
      if (e.test(v) && !e.intersects(played)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
    played.set(v);
  }
  return true;
}

std::pair<Graph, Bipartition> incidence_graph(const Hypergraph& h) {
  const int p = h.points();
  const int m = h.edge_count();
  if (p + m > Graph::kMaxOrder) throw PreconditionError("incidence graph would exceed 256 vertices");
  Graph g(p + m);
  for (int e = 0; e < m; ++e) {
    for (int x : h.edges()[e]) g.add_edge(x, p + e);
  }
  Bipartition b{VertexSet::range(p), VertexSet::range(p + m) - VertexSet::range(p)};
  return {std::move(g), b};
}

namespace {

Hypergraph side_hypergraph(const Graph& g, const VertexSet& points, const VertexSet& edge_side) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int p = 0;
  for (int v : points) index[v] = p++;
  std::vector<VertexSet> edges;
  for (int v : edge_side) {
    VertexSet e;
    for (int u : g.neighbors(v)) e.set(index[u]);
    edges.push_back(e);
  }
  return Hypergraph(p, std::move(edges));
}

}  // namespace

std::pair<Hypergraph, Hypergraph> open_neighborhood_hypergraph(const Graph& g, const Bipartition& b) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).empty()) throw InvariantViolation("vertex " + std::to_string(v) + " is isolated");
    const VertexSet& own = b.side_a.test(v) ? b.side_a : b.side_b;
    if (g.neighbors(v).intersects(own) || !(b.side_a.test(v) ^ b.side_b.test(v))) {
      throw PreconditionError("graph is not bipartite under the given sides");
    }
  }
  return {side_hypergraph(g, b.side_a, b.side_b), side_hypergraph(g, b.side_b, b.side_a)};
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t offset = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      offset += out.size() + 1;
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw FormatError("hypergraph: missing header", offset);
  std::istringstream header(line);
  int p = -1;
  int m = -1;
  if (!(header >> p >> m) || p < 0 || m < 0) throw FormatError("hypergraph: header must be \"p m\"", 0);
  std::vector<VertexSet> edges;
  for (int e = 0; e < m; ++e) {
    if (!next_line(line)) throw FormatError("hypergraph: expected " + std::to_string(m) + " edge lines", offset);
    std::istringstream row(line);
    VertexSet edge;
    int x = 0;
    while (row >> x) {
      if (x < 0 || x >= p) throw FormatError("hypergraph: point " + std::to_string(x) + " out of range", offset);
      edge.set(x);
    }
    if (!row.eof()) throw FormatError("hypergraph: non-integer token", offset);
    edges.push_back(edge);
  }
  try {
    return Hypergraph(p, std::move(edges));
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("hypergraph: ") + e.what(), offset);
  }
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.points() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    bool sep = false;
    for (int x : e) {
      if (sep) out << ' ';
      out << x;
      sep = true;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace domlab
