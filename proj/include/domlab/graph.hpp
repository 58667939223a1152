#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domlab/vertex_set.hpp"

namespace domlab {

/// Undirected simple graph on at most 256 vertices, stored as one open
/// neighborhood bitset per vertex.
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  std::span<const VertexSet> rows() const { return adj_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  int edge_count() const;

  /// Adds {u, v}; self-loops are rejected, repeated edges are idempotent.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Result vertex i is this graph's vertex order[i]; order is a permutation.
  Graph relabeled(std::span<const int> order) const;

  /// Subgraph induced by `keep`, vertices renumbered in ascending order.
  Graph induced(const VertexSet& keep) const;

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Two-coloring; side_a holds the color of the lowest vertex of each component.
struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

/// Classes of vertices with identical open neighborhoods, ordered by their
/// smallest member.
struct TwinPartition {
  std::vector<VertexSet> classes;
};

struct ChordalResult {
  bool chordal = false;
  /// Perfect elimination ordering when chordal.
  std::optional<std::vector<int>> elimination_order;
};

// graph6 ---------------------------------------------------------------------

/// Decodes one graph6 line (no trailing newline; an optional ">>graph6<<"
/// header is accepted). Throws FormatError with the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// structure --------------------------------------------------------------------

std::optional<Bipartition> bipartition(const Graph& g);
bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);
/// Sorted descending.
std::vector<int> degree_sequence(const Graph& g);
bool is_regular(const Graph& g);

TwinPartition false_twin_partition(const Graph& g);
bool is_false_twin_free(const Graph& g);
/// Keeps the lowest-indexed member of each false-twin class.
Graph quotient_false_twins(const Graph& g);

ChordalResult is_chordal(const Graph& g);
VertexSet simplicial_vertices(const Graph& g);

Graph complement(const Graph& g);

// canonical form ---------------------------------------------------------------

/// Relabeled copy of g such that isomorphic inputs give identical outputs.
/// Partition refinement plus individualization with automorphism pruning.
/// Intended for n <= 16; larger graphs work but symmetric ones can be slow.
Graph canonical_form(const Graph& g);

/// Canonical relabeling as an order: canonical vertex i is g's vertex order[i].
std::vector<int> canonical_order(const Graph& g);

/// Upper triangle of the adjacency matrix in graph6 bit order, packed
/// MSB-first into the low n(n-1)/2 bits. Requires n <= 11.
std::uint64_t pack_upper_triangle(const Graph& g);
Graph unpack_upper_triangle(int n, std::uint64_t code);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace domlab
