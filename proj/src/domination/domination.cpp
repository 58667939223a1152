#include "domlab/domination.hpp"

#include <algorithm>

#include "domlab/detail/search.hpp"
#include "domlab/errors.hpp"
#include "domlab/kernels.hpp"

namespace domlab {

namespace {

void require_no_isolated(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).empty()) {
      throw InvariantViolation("vertex " + std::to_string(v) +
                               " is isolated; total domination is undefined");
    }
  }
}

void require_distinct(const Graph& g, std::span<const int> sequence) {
  VertexSet seen;
  for (int v : sequence) {
    if (v < 0 || v >= g.order()) {
      throw PreconditionError("sequence entry " + std::to_string(v) + " out of range");
    }
    if (seen.test(v)) throw PreconditionError("vertex " + std::to_string(v) + " repeated in sequence");
    seen.set(v);
  }
}

}  // namespace

std::string_view invariant_name(Invariant kind) {
  return kind == Invariant::kTotalDomination ? "gamma_t" : "gamma_grt";
}

bool is_total_dominating_set(const Graph& g, const VertexSet& s) {
  require_no_isolated(g);
  return kernels::union_rows(g.rows(), s & g.vertices()) == g.vertices();
}

std::vector<int> footprints(const Graph& g, std::span<const int> sequence) {
  require_distinct(g, sequence);
  std::vector<int> out;
  VertexSet dominated;
  for (int v : sequence) {
    out.push_back((g.neighbors(v) - dominated).first());
    dominated |= g.neighbors(v);
  }
  return out;
}

bool is_legal_sequence(const Graph& g, std::span<const int> sequence) {
  require_no_isolated(g);
  const auto fp = footprints(g, sequence);
  return std::none_of(fp.begin(), fp.end(), [](int f) { return f < 0; });
}

DominationCertificate total_domination_number(const Graph& g) {
  require_no_isolated(g);
  const auto cover = detail::min_set_cover(g.rows(), g.vertices());
  DominationCertificate cert;
  cert.kind = Invariant::kTotalDomination;
  cert.value = cover.size;
  cert.witness = cover.rows;
  cert.stats.nodes = cover.nodes;
  return cert;
}

DominationCertificate grundy_total_domination_number(const Graph& g, const SolverOptions& options) {
  require_no_isolated(g);
  const auto seq = detail::longest_legal_sequence(g.rows(), options.memo_cap);
  DominationCertificate cert;
  cert.kind = Invariant::kGrundyTotalDomination;
  cert.value = seq.length;
  cert.witness = seq.order;
  cert.stats = {seq.nodes, seq.memo_entries, seq.memo_saturated};
  return cert;
}

DominationCertificate grundy_bipartite(const Graph& g, const Bipartition& b, const SolverOptions& options) {
  require_no_isolated(g);
  if ((b.side_a | b.side_b) != g.vertices() || b.side_a.intersects(b.side_b)) {
    throw PreconditionError("bipartition does not partition the vertex set");
  }
  for (int v : b.side_a) {
    if (g.neighbors(v).intersects(b.side_a)) throw PreconditionError("graph is not bipartite under the given sides");
  }
  for (int v : b.side_b) {
    if (g.neighbors(v).intersects(b.side_b)) throw PreconditionError("graph is not bipartite under the given sides");
  }

  // Points on the smaller side keep the memo keyed on at most min(|A|,|B|)
  // bits; both sides give the same value.
  const bool points_on_a = b.side_a.count() <= b.side_b.count();
  const VertexSet& edge_side = points_on_a ? b.side_b : b.side_a;
  const std::vector<int> edge_vertices = edge_side.to_vector();
  std::vector<VertexSet> edges;
  edges.reserve(edge_vertices.size());
  for (int v : edge_vertices) edges.push_back(g.neighbors(v));

  const auto seq = detail::longest_legal_sequence(edges, options.memo_cap);

  // Reversed footprints of a legal edge sequence form a legal transversal
  // sequence: footprint i lies in no edge played before edge i.
  DominationCertificate cert;
  cert.kind = Invariant::kGrundyTotalDomination;
  cert.value = 2 * seq.length;
  const std::size_t k = seq.order.size();
  for (std::size_t i = 0; i < k; ++i) {
    cert.witness.push_back(edge_vertices[static_cast<std::size_t>(seq.order[i])]);
    cert.witness.push_back(seq.footprints[k - 1 - i]);
  }
  cert.stats = {seq.nodes, seq.memo_entries, seq.memo_saturated};
  return cert;
}

namespace {

int oracle_dfs(const Graph& g, VertexSet used, const VertexSet& dominated) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (used.test(v)) continue;
    bool fresh = false;
    for (int u = 0; u < g.order(); ++u) {
      if (g.adjacent(v, u) && !dominated.test(u)) {
        fresh = true;
        break;
      }
    }
    if (!fresh) continue;
    VertexSet next_used = used;
    next_used.set(v);
    best = std::max(best, 1 + oracle_dfs(g, next_used, dominated | g.neighbors(v)));
  }
  return best;
}

}  // namespace

int grundy_oracle(const Graph& g) {
  if (g.order() > 12) throw PreconditionError("grundy_oracle refuses graphs with more than 12 vertices");
  require_no_isolated(g);
  return oracle_dfs(g, VertexSet{}, VertexSet{});
}

bool certificate_holds(const Graph& g, const DominationCertificate& cert) {
  if (static_cast<int>(cert.witness.size()) != cert.value) return false;
  VertexSet s;
  for (int v : cert.witness) {
    if (v < 0 || v >= g.order() || s.test(v)) return false;
    s.set(v);
  }
  if (!is_total_dominating_set(g, s)) return false;
  if (cert.kind == Invariant::kGrundyTotalDomination) return is_legal_sequence(g, cert.witness);
  return true;
}

}  // namespace domlab
