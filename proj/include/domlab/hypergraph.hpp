#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Points 0..points-1 and a list of hyperedges. Repeated edges are kept as
/// distinct edges (multiset semantics).
class Hypergraph {
 public:
  /// Throws PreconditionError unless every edge is a nonempty subset of the
  /// points, every point lies in some edge, and points, edges <= 256.
  Hypergraph(int points, std::vector<VertexSet> edges);

  int points() const { return points_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// For each point, the set of edge indices containing it.
  std::vector<VertexSet> incidences() const;

 private:
  int points_;
  std::vector<VertexSet> edges_;
};

/// A number together with the edge indices / point indices attaining it.
struct HypergraphResult {
  int value = 0;
  std::vector<int> witness;
};

/// rho: minimum edge cover; witness = edge indices ascending.
HypergraphResult covering_number(const Hypergraph& h);
/// rho_gr: longest legal edge sequence (automatically an edge cover).
HypergraphResult grundy_covering_number(const Hypergraph& h, std::size_t memo_cap = kDefaultMemoCap);
/// tau_gr: longest legal transversal sequence; searched on the set of edges
/// already hit by played points.
HypergraphResult grundy_transversal_number(const Hypergraph& h, std::size_t memo_cap = kDefaultMemoCap);

bool is_edge_cover(const Hypergraph& h, std::span<const int> edges);
bool is_legal_edge_sequence(const Hypergraph& h, std::span<const int> edges);
bool is_legal_transversal_sequence(const Hypergraph& h, std::span<const int> points);

/// Points become vertices 0..p-1 (side A), edge e becomes vertex p+e (side B).
std::pair<Graph, Bipartition> incidence_graph(const Hypergraph& h);

/// H1 = (A, {N(b) : b in B}) and H2 = (B, {N(a) : a in A}), each with its
/// side renumbered in ascending vertex order.
std::pair<Hypergraph, Hypergraph> open_neighborhood_hypergraph(const Graph& g, const Bipartition& b);

/// "p m" then m lines of point indices.
Hypergraph parse_hypergraph(std::istream& in);
std::string format_hypergraph(const Hypergraph& h);

}  // namespace domlab
