#include "domlab/extremal.hpp"

namespace domlab {

Classification classify_equal(const Graph& g, const SolverOptions& options) {
  Classification out;
  out.gamma_t = total_domination_number(g);
  const auto sides = bipartition(g);
  out.gamma_grt = sides ? grundy_bipartite(g, *sides, options) : grundy_total_domination_number(g, options);
  if (!out.equal()) {
    out.label = "not-equal";
    return out;
  }

  const Graph thin = quotient_false_twins(g);
  out.via_twin_quotient = thin.order() != g.order();
  const int value = out.gamma_t.value;
  out.label = "unclassified";

  if (value == 2) {
    out.parts = complete_multipartite_parts(g);
    if (out.parts && out.parts->size() >= 2) out.label = "complete-multipartite";
    out.via_twin_quotient = false;
    return out;
  }

  const auto thin_sides = bipartition(thin);
  if (value == 4) {
    if (thin_sides && recognize_knn_minus_matching(thin)) {
      out.label = "knn-minus-matching";
    } else if (thin_sides) {
      out.note = "bipartite twin-free value-4 graph outside K_{n,n}-M";
    }
    return out;
  }

  if (value == 6 && thin_sides) {
    if (!is_regular(thin)) {
      out.label = "unclassified-conjectural";
      out.note = "value 6 without regularity";
      return out;
    }
    try {
      out.extraction = oa_from_graph(thin, *thin_sides);
      out.label = "oa-regular-bipartite";
      // The other side has to yield an array as well; only side A is kept.
      oa_from_graph(thin, Bipartition{thin_sides->side_b, thin_sides->side_a});
    } catch (const ExtractionError& e) {
      out.note = e.what();
    }
    return out;
  }
  if (value == 6) {
    out.label = "unclassified-conjectural";
    out.note = "value 6 on a non-bipartite graph";
  }
  return out;
}

}  // namespace domlab
