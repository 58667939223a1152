#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

enum class Invariant { kTotalDomination, kGrundyTotalDomination };

std::string_view invariant_name(Invariant kind);  // "gamma_t" / "gamma_grt"

struct SolverStats {
  std::uint64_t nodes = 0;
  std::size_t memo_entries = 0;
  bool memo_saturated = false;
};

/// A value together with the object that attains it: a total dominating set
/// (ascending) for gamma_t, a total dominating sequence for gamma_grt.
struct DominationCertificate {
  Invariant kind = Invariant::kTotalDomination;
  int value = 0;
  std::vector<int> witness;
  SolverStats stats;
};

inline constexpr std::size_t kDefaultMemoCap = std::size_t{1} << 26;

struct SolverOptions {
  std::size_t memo_cap = kDefaultMemoCap;
};

/// True iff every vertex has a neighbor in s. Throws InvariantViolation if g
/// has an isolated vertex.
bool is_total_dominating_set(const Graph& g, const VertexSet& s);

/// True iff every entry totally dominates a vertex not dominated by the
/// earlier entries. Throws PreconditionError on repeated or out-of-range
/// vertices and InvariantViolation on an isolated vertex.
bool is_legal_sequence(const Graph& g, std::span<const int> sequence);

/// The footprint of each entry (smallest newly dominated vertex), or -1 where
/// an entry dominates nothing new.
std::vector<int> footprints(const Graph& g, std::span<const int> sequence);

/// Exact gamma_t by branch-and-bound set cover over the neighborhoods.
DominationCertificate total_domination_number(const Graph& g);

/// Exact Grundy total domination number. A legal sequence that cannot be
/// extended is automatically total dominating (a vertex u left undominated
/// would let any neighbor of u extend it), so this maximizes legal length.
DominationCertificate grundy_total_domination_number(const Graph& g, const SolverOptions& options = {});

/// Grundy total domination number of a bipartite graph as twice the Grundy
/// covering number of a one-sided neighborhood hypergraph. The witness
/// interleaves an edge covering sequence with its reversed footprints.
DominationCertificate grundy_bipartite(const Graph& g, const Bipartition& b, const SolverOptions& options = {});

/// Plain exhaustive search over legal sequences, no memo; for testing.
/// Refuses graphs with more than 12 vertices.
int grundy_oracle(const Graph& g);

/// Re-checks a certificate against g: witness length equals value and the
/// witness is a total dominating set / total dominating sequence.
bool certificate_holds(const Graph& g, const DominationCertificate& cert);

}  // namespace domlab
