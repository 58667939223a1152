#pragma once

#include <random>

#include "domlab/graph.hpp"
#include "domlab/hypergraph.hpp"

// Seeded generators for property corpora. All take the engine by reference
// so one seed drives a whole run.

namespace domlab {

using Rng = std::mt19937_64;

/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);

/// Connected bipartite graph on n >= 2 vertices: random side sizes, a random
/// spanning tree across the sides, then each remaining cross pair with
/// probability p. Side A is the lowest-index rule of bipartition().
Graph random_connected_bipartite(int n, double p, Rng& rng);

/// Random vertex relabeling of g.
Graph random_relabel(const Graph& g, Rng& rng);

/// Hypergraph on `points` points with `edges` nonempty edges, each point
/// included with probability p; points left uncovered are added to a random
/// edge.
Hypergraph random_hypergraph(int points, int edges, double p, Rng& rng);

}  // namespace domlab
