#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domlab/designs.hpp"
#include "domlab/domination.hpp"
#include "domlab/errors.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Part sizes (ascending) if the complement of g is a disjoint union of
/// cliques, otherwise nullopt.
std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g);

/// K_{n,n} minus the perfect matching a_i b_i: A = 0..n-1, B = n..2n-1.
Graph knn_minus_matching(int n);

/// Bipartite, both sides of size n >= 2, every degree n-1, and the missing
/// cross pairs form a perfect matching.
bool recognize_knn_minus_matching(const Graph& g);

/// (n-k)-regular bipartite graph on 2n vertices, n = k^2-k+1, built from an
/// OA(k, k-1). Vertex layout: a_1..a_k = 0..k-1, a'_r = k + r, class B_s
/// symbol x = n + s(k-1) + x, and b* = 2n-1.
std::pair<Graph, Bipartition> graph_from_oa(const OrthogonalArray& a);

/// OA(q+1, q) from the field construction of mols_family(q).
OrthogonalArray standard_oa(int q);

/// Every two distinct vertices of one side together miss exactly one
/// vertex of the other side, on both sides. Throws PreconditionError when g
/// is not bipartite under b or has false twins.
bool verify_pair_domination(const Graph& g, const Bipartition& b);

/// Steps of the structural argument, in the order they are checked.
enum class ExtractionClaim {
  kOrderShape,       // |A| = |B| = n = k^2-k+1, k >= 3
  kRegularity,       // (n-k)-regular
  kPairDomination,   // any two same-side vertices miss exactly one vertex
  kPairSplit,        // |B1| = |B2| = k-1, |B'| = n-2k+1
  kAPrimeCover,      // x in A' sees B1 and B2 and misses k-1 vertices of B'
  kUniqueNonNeighbor,  // b != b* has one non-neighbor in {a1,a2} and A'
  kPartition,        // the non-neighbor sets of A' partition B'
  kCountEquation,    // l(k-1) = n-2k+1
  kDoublePrimeRows,  // a'' misses exactly one vertex per class and sees b*
  kSizes,            // l = k-2, |A''| = (k-1)^2
  kArrayValid,       // the read-off words form an OA(k, k-1)
};

std::string_view claim_name(ExtractionClaim c);

class ExtractionError : public Error {
 public:
  ExtractionError(ExtractionClaim claim, const std::string& detail)
      : Error(std::string(claim_name(claim)) + ": " + detail), claim_(claim) {}
  ExtractionClaim claim() const { return claim_; }

 private:
  ExtractionClaim claim_;
};

/// Named pieces of the extraction, all as vertex indices of the input.
/// classes[i] lists the non-neighbors of the i-th anchor (a1, a2, then A'
/// ascending) in B minus b*; symbol x of class i is classes[i][x].
struct ExtractionContext {
  int k = 0;
  int n = 0;
  int a1 = -1;
  int a2 = -1;
  int b_star = -1;
  std::vector<int> b_prime;
  std::vector<int> a_prime;
  std::vector<int> a_double_prime;
  std::vector<std::vector<int>> classes;
  int ell() const { return static_cast<int>(a_prime.size()); }
};

struct Extraction {
  OrthogonalArray oa;
  ExtractionContext context;
};

/// Reads an OA(k, k-1) off an (n-k)-regular bipartite graph with the
/// pair-domination property, using side_a of b. Anchors a1, a2 are the two
/// lowest vertices of side_a; symbols within a class follow ascending vertex
/// index; rows follow ascending a''. Throws ExtractionError naming the first
/// step that fails.
Extraction oa_from_graph(const Graph& g, const Bipartition& b);

/// The 14-vertex 4-regular bipartite example: top vertices 0..6, bottom
/// vertices 7..13.
Graph fig1_graph();

/// "fig1", "knn-m:<n>", "oa-graph:<q>". Throws PreconditionError on an
/// unknown name and UnsupportedOrder on an unsupported q.
Graph builtin_graph(std::string_view name);

struct Classification {
  DominationCertificate gamma_t;
  DominationCertificate gamma_grt;
  /// "not-equal", "complete-multipartite", "knn-minus-matching",
  /// "oa-regular-bipartite", "unclassified-conjectural", "unclassified"
  std::string label;
  bool via_twin_quotient = false;
  std::optional<std::vector<int>> parts;
  std::optional<Extraction> extraction;
  std::string note;

  bool equal() const { return gamma_t.value == gamma_grt.value; }
};

/// Computes both invariants and, when they agree, names the structural
/// family that explains the value. Bipartite/twin-free tests and the
/// value-4 and value-6 recognizers run on the false-twin quotient, which has
/// the same invariants.
Classification classify_equal(const Graph& g, const SolverOptions& options = {});

}  // namespace domlab
