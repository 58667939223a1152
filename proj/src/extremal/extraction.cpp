#include <algorithm>
#include <cmath>

#include "domlab/extremal.hpp"

namespace domlab {

std::string_view claim_name(ExtractionClaim c) {
  switch (c) {
    case ExtractionClaim::kOrderShape: return "order-shape (n = k^2-k+1, k >= 3)";
    case ExtractionClaim::kRegularity: return "regularity (degree n-k)";
    case ExtractionClaim::kPairDomination: return "pair-domination";
    case ExtractionClaim::kPairSplit: return "pair-split sizes";
    case ExtractionClaim::kAPrimeCover: return "A' neighborhoods";
    case ExtractionClaim::kUniqueNonNeighbor: return "unique non-neighbor";
    case ExtractionClaim::kPartition: return "B' partition";
    case ExtractionClaim::kCountEquation: return "count equation l(k-1) = n-2k+1";
    case ExtractionClaim::kDoublePrimeRows: return "A'' rows";
    case ExtractionClaim::kSizes: return "sizes (l = k-2, |A''| = (k-1)^2)";
    case ExtractionClaim::kArrayValid: return "orthogonal array";
  }
  return "unknown";
}

namespace {

void require_sides(const Graph& g, const Bipartition& b) {
  if ((b.side_a | b.side_b) != g.vertices() || b.side_a.intersects(b.side_b)) {
    throw PreconditionError("bipartition does not partition the vertex set");
  }
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& own = b.side_a.test(v) ? b.side_a : b.side_b;
    if (g.neighbors(v).intersects(own)) throw PreconditionError("graph is not bipartite under the given sides");
  }
}

bool pairs_miss_one(const Graph& g, const VertexSet& side, int other_size) {
  for (int x : side) {
    for (int y = side.next(x); y != -1; y = side.next(y)) {
      if ((g.neighbors(x) | g.neighbors(y)).count() != other_size - 1) return false;
    }
  }
  return true;
}

void expect(bool ok, ExtractionClaim claim, const std::string& detail) {
  if (!ok) throw ExtractionError(claim, detail);
}

}  // namespace

bool verify_pair_domination(const Graph& g, const Bipartition& b) {
  require_sides(g, b);
  if (!is_false_twin_free(g)) throw PreconditionError("pair-domination check needs a false twin-free graph");
  return pairs_miss_one(g, b.side_a, b.side_b.count()) && pairs_miss_one(g, b.side_b, b.side_a.count());
}

Extraction oa_from_graph(const Graph& g, const Bipartition& b) {
  require_sides(g, b);
  const VertexSet& side_a = b.side_a;
  const VertexSet& side_b = b.side_b;
  const int n = side_a.count();

  int k = 3;
  while (k * k - k + 1 < n) ++k;
  expect(side_b.count() == n && k * k - k + 1 == n, ExtractionClaim::kOrderShape,
         "sides of size " + std::to_string(n) + " and " + std::to_string(side_b.count()) +
             " are not n = k^2-k+1 with k >= 3");
  for (int v = 0; v < g.order(); ++v) {
    expect(g.degree(v) == n - k, ExtractionClaim::kRegularity,
           "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", expected " +
               std::to_string(n - k));
  }
  expect(is_false_twin_free(g) && pairs_miss_one(g, side_a, n) && pairs_miss_one(g, side_b, n),
         ExtractionClaim::kPairDomination, "some same-side pair does not miss exactly one vertex");

  ExtractionContext ctx;
  ctx.k = k;
  ctx.n = n;
  ctx.a1 = side_a.first();
  ctx.a2 = side_a.next(ctx.a1);
  const VertexSet& n1 = g.neighbors(ctx.a1);
  const VertexSet& n2 = g.neighbors(ctx.a2);
  ctx.b_star = (side_b - (n1 | n2)).first();
  const VertexSet rest_b = side_b - VertexSet::single(ctx.b_star);
  const VertexSet missed_by_a1 = n2 - n1;
  const VertexSet missed_by_a2 = n1 - n2;
  const VertexSet b_prime = n1 & n2;
  expect(missed_by_a1.count() == k - 1 && missed_by_a2.count() == k - 1 && b_prime.count() == n - 2 * k + 1,
         ExtractionClaim::kPairSplit,
         "|B1|=" + std::to_string(missed_by_a1.count()) + " |B2|=" + std::to_string(missed_by_a2.count()) +
             " |B'|=" + std::to_string(b_prime.count()));
  ctx.b_prime = b_prime.to_vector();

  VertexSet a_prime;
  VertexSet a_double_prime;
  for (int a : side_a) {
    if (a == ctx.a1 || a == ctx.a2) continue;
    (g.neighbors(a).test(ctx.b_star) ? a_double_prime : a_prime).set(a);
  }
  ctx.a_prime = a_prime.to_vector();
  ctx.a_double_prime = a_double_prime.to_vector();

  for (int x : a_prime) {
    expect((missed_by_a1 | missed_by_a2).subset_of(g.neighbors(x)) && (b_prime - g.neighbors(x)).count() == k - 1,
           ExtractionClaim::kAPrimeCover, "vertex " + std::to_string(x) + " of A' violates the neighborhood shape");
  }

  const VertexSet anchors = VertexSet::of({ctx.a1, ctx.a2}) | a_prime;
  for (int y : rest_b) {
    const int misses = (anchors - g.neighbors(y)).count();
    expect(misses == 1, ExtractionClaim::kUniqueNonNeighbor,
           "vertex " + std::to_string(y) + " has " + std::to_string(misses) + " non-neighbors among the anchors");
  }

  std::vector<VertexSet> classes{missed_by_a1, missed_by_a2};
  VertexSet covered;
  for (int x : a_prime) {
    const VertexSet cls = rest_b - g.neighbors(x);
    expect(!cls.intersects(covered), ExtractionClaim::kPartition, "non-neighbor sets of A' overlap");
    covered |= cls;
    classes.push_back(cls);
  }
  expect(covered == b_prime, ExtractionClaim::kPartition, "non-neighbor sets of A' do not cover B'");
  expect(ctx.ell() * (k - 1) == n - 2 * k + 1, ExtractionClaim::kCountEquation,
         "l = " + std::to_string(ctx.ell()));

  for (int a : a_double_prime) {
    for (const auto& cls : classes) {
      expect((cls - g.neighbors(a)).count() == 1, ExtractionClaim::kDoublePrimeRows,
             "vertex " + std::to_string(a) + " does not miss exactly one vertex of class " + cls.to_string());
    }
  }
  expect(ctx.ell() == k - 2 && a_double_prime.count() == (k - 1) * (k - 1), ExtractionClaim::kSizes,
         "l = " + std::to_string(ctx.ell()) + ", |A''| = " + std::to_string(a_double_prime.count()));

  for (const auto& cls : classes) ctx.classes.push_back(cls.to_vector());

  OrthogonalArray oa;
  oa.columns = k;
  oa.symbols = k - 1;
  for (int a : a_double_prime) {
    std::vector<int> word;
    for (const auto& cls : ctx.classes) {
      const auto it = std::find_if(cls.begin(), cls.end(), [&](int y) { return !g.adjacent(a, y); });
      word.push_back(static_cast<int>(it - cls.begin()));
    }
    oa.rows.push_back(std::move(word));
  }
  if (const Check c = validate_oa(oa); !c) throw ExtractionError(ExtractionClaim::kArrayValid, c.reason);
  return {std::move(oa), std::move(ctx)};
}

}  // namespace domlab
