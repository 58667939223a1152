#include "report_json.hpp"

namespace domlab::cli {

namespace {
Json set_json(const std::vector<int>& vs) { return Json(vs); }
}  // namespace

Json to_json(const SolverStats& s) {
  return {{"nodes", s.nodes}, {"memo_entries", s.memo_entries}, {"memo_saturated", s.memo_saturated}};
}

Json to_json(const DominationCertificate& c, bool witness) {
  Json j{{"kind", invariant_name(c.kind)}, {"value", c.value}};
  if (witness) j["witness"] = set_json(c.witness);
  j["stats"] = to_json(c.stats);
  return j;
}

Json to_json(const OrthogonalArray& a) {
  return {{"columns", a.columns}, {"symbols", a.symbols}, {"rows", a.rows}};
}

Json to_json(const ExtractionContext& c) {
  Json classes = Json::array();
  for (const auto& cls : c.classes) classes.push_back(cls);
  Json j{{"k", c.k},
         {"n", c.n},
         {"ell", c.ell()},
         {"a1", c.a1},
         {"a2", c.a2},
         {"b_star", c.b_star},
         {"B1", c.classes.empty() ? Json::array() : Json(c.classes[0])},
         {"B2", c.classes.size() < 2 ? Json::array() : Json(c.classes[1])},
         {"B_prime", c.b_prime},
         {"A_prime", c.a_prime},
         {"A_double_prime", c.a_double_prime},
         {"classes", classes}};
  j["sizes"] = {{"B1", c.k - 1},
                {"B_prime", c.b_prime.size()},
                {"A_prime", c.a_prime.size()},
                {"A_double_prime", c.a_double_prime.size()},
                {"count_equation", c.ell() * (c.k - 1) == c.n - 2 * c.k + 1}};
  return j;
}

Json to_json(const Classification& c) {
  Json j{{"label", c.label},
         {"gamma_t", to_json(c.gamma_t, true)},
         {"gamma_grt", to_json(c.gamma_grt, true)},
         {"via_twin_quotient", c.via_twin_quotient}};
  if (c.parts) j["parts"] = *c.parts;
  if (c.extraction) {
    j["oa"] = to_json(c.extraction->oa);
    j["context"] = to_json(c.extraction->context);
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const SearchSpec& s) {
  Json filters = Json::array();
  for (Filter f : s.filters) filters.push_back(filter_name(f));
  Json j{{"source", s.stream_path ? "graph6-stream" : "builtin"}};
  if (s.stream_path) {
    j["stream_path"] = *s.stream_path;
  } else {
    j["max_n"] = s.max_n;
  }
  j["builtin_cap"] = kBuiltinMaxOrder;
  j["filters"] = filters;
  j["target"] = s.target ? Json(*s.target) : Json("report-all");
  j["jobs"] = s.jobs;
  j["chunk_size"] = s.chunk_size;
  j["memo_cap"] = s.solver.memo_cap;
  return j;
}

Json to_json(const SearchReport& r) {
  Json matches = Json::array();
  for (const auto& m : r.matches) {
    matches.push_back({{"graph6", m.graph6},
                       {"gamma_t", to_json(m.gamma_t, true)},
                       {"gamma_grt", to_json(m.gamma_grt, true)},
                       {"witness_sequence", m.gamma_grt.witness},
                       {"classification", m.classification}});
  }
  Json errors = Json::array();
  for (const auto& e : r.errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  return {{"schema_version", kSchemaVersion},
          {"command", "search"},
          {"spec", to_json(r.spec)},
          {"graphs_examined", r.graphs_examined},
          {"skipped_isolated", r.skipped_isolated},
          {"filtered_out", r.filtered_out},
          {"evaluated", r.evaluated},
          {"match_count", r.matches.size()},
          {"matches", matches},
          {"stream_errors", errors},
          {"elapsed_ms", r.elapsed_ms}};
}

Json to_json(const SuiteResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}, {"instances", c.instances}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"elapsed_ms", r.elapsed_ms}, {"checks", checks}};
}

}  // namespace domlab::cli
