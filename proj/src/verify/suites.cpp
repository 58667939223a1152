#include <algorithm>
#include <array>
#include <chrono>

#include "domlab/designs.hpp"
#include "domlab/enumeration.hpp"
#include "domlab/errors.hpp"
#include "domlab/extremal.hpp"
#include "domlab/hypergraph.hpp"
#include "domlab/random.hpp"
#include "domlab/verify.hpp"

namespace domlab {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

constexpr std::array<std::string_view, 7> kSuites = {
    "evenness", "prop-transversal", "thm-incidence", "thm-knn", "thm-chordal", "thm-oa", "lemma-pair"};

// Records the first failure only; later instances still count.
void fail(VerifyCheck& c, std::string detail, const Graph* g = nullptr) {
  if (!c.passed) return;
  c.passed = false;
  c.detail = std::move(detail);
  if (g) c.counterexample = to_graph6(*g);
}

int count_in(std::span<const int> seq, const VertexSet& side) {
  return static_cast<int>(std::count_if(seq.begin(), seq.end(), [&](int v) { return side.test(v); }));
}

std::vector<Hypergraph> hypergraph_corpus(Rng& rng) {
  std::vector<Hypergraph> out;
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  for (int i = 0; i < 500; ++i) {
    const int p = size(rng);
    const int m = size(rng);
    out.push_back(random_hypergraph(p, m, density(rng), rng));
  }
  return out;
}

void evenness(const VerifyOptions& o, SuiteResult& r) {
  Rng rng(o.seed);
  VerifyCheck even{"grundy value even", true, 0, {}, {}};
  VerifyCheck balanced{"witness side-balanced", true, 0, {}, {}};
  VerifyCheck agree{"bipartite solver matches general solver", true, 0, {}, {}};
  std::uniform_int_distribution<int> order(2, 14);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_connected_bipartite(order(rng), density(rng), rng);
    const Bipartition sides = *bipartition(g);
    const auto fast = grundy_bipartite(g, sides, o.solver);
    const auto general = grundy_total_domination_number(g, o.solver);
    ++even.instances;
    ++balanced.instances;
    ++agree.instances;
    if (fast.value % 2 != 0) fail(even, "odd value " + std::to_string(fast.value), &g);
    for (const auto* cert : {&fast, &general}) {
      if (!certificate_holds(g, *cert) ||
          count_in(cert->witness, sides.side_a) != count_in(cert->witness, sides.side_b)) {
        fail(balanced, "unbalanced or invalid witness", &g);
      }
    }
    if (fast.value != general.value) {
      fail(agree, std::to_string(fast.value) + " vs " + std::to_string(general.value), &g);
    }
  }
  r.checks = {even, balanced, agree};
}

void prop_transversal(const VerifyOptions& o, SuiteResult& r) {
  Rng rng(o.seed);
  VerifyCheck equal{"tau_gr = rho_gr", true, 0, {}, {}};
  VerifyCheck order{"rho <= rho_gr", true, 0, {}, {}};
  VerifyCheck witnesses{"witnesses legal", true, 0, {}, {}};
  for (const auto& h : hypergraph_corpus(rng)) {
    const auto rho = covering_number(h);
    const auto rho_gr = grundy_covering_number(h, o.solver.memo_cap);
    const auto tau_gr = grundy_transversal_number(h, o.solver.memo_cap);
    ++equal.instances;
    ++order.instances;
    ++witnesses.instances;
    const auto g = incidence_graph(h).first;
    if (tau_gr.value != rho_gr.value) {
      fail(equal, std::to_string(tau_gr.value) + " vs " + std::to_string(rho_gr.value) + " on incidence graph", &g);
    }
    if (rho.value > rho_gr.value) fail(order, "rho exceeds rho_gr on incidence graph", &g);
    if (!is_edge_cover(h, rho.witness) || !is_legal_edge_sequence(h, rho_gr.witness) ||
        !is_edge_cover(h, rho_gr.witness) || !is_legal_transversal_sequence(h, tau_gr.witness)) {
      fail(witnesses, "invalid witness on incidence graph", &g);
    }
  }
  r.checks = {equal, order, witnesses};
}

void thm_incidence(const VerifyOptions& o, SuiteResult& r) {
  Rng rng(o.seed);
  VerifyCheck doubled{"grundy(incidence) = 2 rho_gr", true, 0, {}, {}};
  for (const auto& h : hypergraph_corpus(rng)) {
    const auto g = incidence_graph(h).first;
    const int rho_gr = grundy_covering_number(h, o.solver.memo_cap).value;
    const int grundy = grundy_total_domination_number(g, o.solver).value;
    ++doubled.instances;
    if (grundy != 2 * rho_gr) {
      fail(doubled, std::to_string(grundy) + " vs 2*" + std::to_string(rho_gr), &g);
    }
  }
  VerifyCheck back{"incidence graph of neighborhood hypergraphs is isomorphic", true, 0, {}, {}};
  std::uniform_int_distribution<int> order(2, 12);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_connected_bipartite(order(rng), 0.4, rng);
    const auto [h1, h2] = open_neighborhood_hypergraph(g, *bipartition(g));
    ++back.instances;
    if (!are_isomorphic(incidence_graph(h1).first, g) || !are_isomorphic(incidence_graph(h2).first, g)) {
      fail(back, "round trip not isomorphic", &g);
    }
  }
  r.checks = {doubled, back};
}

SearchReport search(const VerifyOptions& o, std::vector<Filter> filters, int target) {
  SearchSpec spec;
  spec.max_n = 9;
  spec.filters = std::move(filters);
  spec.target = target;
  spec.jobs = o.jobs;
  spec.solver = o.solver;
  return run_search(spec);
}

void thm_knn(const VerifyOptions& o, SuiteResult& r) {
  VerifyCheck family{"K_{n,n}-M has value 4 for n = 2..8", true, 0, {}, {}};
  for (int n = 2; n <= 8; ++n) {
    const Graph g = knn_minus_matching(n);
    const int gt = total_domination_number(g).value;
    const int ggrt = grundy_total_domination_number(g, o.solver).value;
    ++family.instances;
    if (gt != 4 || ggrt != 4) fail(family, "values " + std::to_string(gt) + "/" + std::to_string(ggrt), &g);
  }

  VerifyCheck converse{"bipartite twin-free value-4 graphs (n <= 9) are K_{n,n}-M", true, 0, {}, {}};
  const auto bip = search(o, {Filter::kBipartite, Filter::kTwinFree}, 4);
  converse.instances = bip.evaluated;
  for (const auto& m : bip.matches) {
    const Graph g = parse_graph6(m.graph6);
    if (!recognize_knn_minus_matching(g)) fail(converse, "value-4 graph outside the family", &g);
  }
  converse.detail = converse.passed ? std::to_string(bip.matches.size()) + " matches, all recognized" : converse.detail;

  VerifyCheck nonbip{"no connected non-bipartite twin-free value-4 graph (n <= 9)", true, 0, {}, {}};
  const auto non = search(o, {Filter::kConnected, Filter::kNonBipartite, Filter::kTwinFree}, 4);
  nonbip.instances = non.evaluated;
  if (!non.matches.empty()) {
    const Graph g = parse_graph6(non.matches.front().graph6);
    fail(nonbip, std::to_string(non.matches.size()) + " matches", &g);
  }
  r.checks = {family, converse, nonbip};
}

void thm_chordal(const VerifyOptions& o, SuiteResult& r) {
  VerifyCheck none{"no connected chordal value-4 graph (n <= 9)", true, 0, {}, {}};
  const auto rep = search(o, {Filter::kConnected, Filter::kChordal}, 4);
  none.instances = rep.evaluated;
  if (!rep.matches.empty()) {
    const Graph g = parse_graph6(rep.matches.front().graph6);
    fail(none, std::to_string(rep.matches.size()) + " matches", &g);
  }
  none.detail = "0 matches expected";
  r.checks = {none};
}

void thm_oa(const VerifyOptions& o, SuiteResult& r) {
  VerifyCheck structure{"OA graphs regular, bipartite, twin-free", true, 0, {}, {}};
  VerifyCheck values{"OA graphs have value 6 (q = 2, 3, 4)", true, 0, {}, {}};
  VerifyCheck extract{"extraction from both sides yields a valid OA", true, 0, {}, {}};
  VerifyCheck round{"graph_from_oa(extracted) isomorphic to input (q <= 5)", true, 0, {}, {}};
  for (int q : supported_orders()) {
    const auto [g, sides] = graph_from_oa(standard_oa(q));
    const int k = q + 1;
    const int n = k * k - k + 1;
    ++structure.instances;
    const auto found = bipartition(g);
    if (g.order() != 2 * n || !found || found->side_a.count() != n || !is_regular(g) ||
        g.degree(0) != n - k || !is_false_twin_free(g)) {
      fail(structure, "q=" + std::to_string(q), &g);
    }
    if (q <= 4) {
      ++values.instances;
      const int gt = total_domination_number(g).value;
      const int ggrt = grundy_bipartite(g, sides, o.solver).value;
      if (gt != 6 || ggrt != 6) {
        fail(values, "q=" + std::to_string(q) + ": " + std::to_string(gt) + "/" + std::to_string(ggrt), &g);
      }
    }
    ++extract.instances;
    try {
      const auto ex = oa_from_graph(g, sides);
      oa_from_graph(g, Bipartition{sides.side_b, sides.side_a});
      if (q <= 5) {
        ++round.instances;
        if (!are_isomorphic(graph_from_oa(ex.oa).first, g)) fail(round, "q=" + std::to_string(q), &g);
      }
    } catch (const ExtractionError& e) {
      fail(extract, "q=" + std::to_string(q) + ": " + e.what(), &g);
    }
  }

  VerifyCheck fig{"fig1 graph: value 6, OA(3,2), isomorphic to the q=2 graph", true, 1, {}, {}};
  const Graph f = fig1_graph();
  try {
    const auto ex = oa_from_graph(f, *bipartition(f));
    if (ex.oa.columns != 3 || ex.oa.symbols != 2 || !are_isomorphic(graph_from_oa(ex.oa).first, f) ||
        total_domination_number(f).value != 6 || grundy_total_domination_number(f, o.solver).value != 6) {
      fail(fig, "mismatch", &f);
    }
  } catch (const ExtractionError& e) {
    fail(fig, e.what(), &f);
  }
  r.checks = {structure, values, extract, round, fig};
}

void lemma_pair(const VerifyOptions&, SuiteResult& r) {
  VerifyCheck holds{"pair domination on value-6 constructions", true, 0, {}, {}};
  std::vector<Graph> graphs{fig1_graph()};
  for (int q : supported_orders()) graphs.push_back(graph_from_oa(standard_oa(q)).first);
  for (const auto& g : graphs) {
    ++holds.instances;
    if (!verify_pair_domination(g, *bipartition(g))) fail(holds, "pair domination fails", &g);
  }
  VerifyCheck control{"pair domination fails on K_{n,n}-M (n = 3..6)", true, 0, {}, {}};
  for (int n = 3; n <= 6; ++n) {
    const Graph g = knn_minus_matching(n);
    ++control.instances;
    if (verify_pair_domination(g, *bipartition(g))) fail(control, "property unexpectedly holds", &g);
  }
  r.checks = {holds, control};
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  using Runner = void (*)(const VerifyOptions&, SuiteResult&);
  static constexpr std::array<Runner, 7> kRunners = {evenness, prop_transversal, thm_incidence, thm_knn,
                                                     thm_chordal, thm_oa, lemma_pair};
  const auto it = std::find(kSuites.begin(), kSuites.end(), name);
  if (it == kSuites.end()) throw PreconditionError("unknown suite \"" + std::string(name) + "\"");
  SuiteResult r;
  r.suite = std::string(name);
  const auto start = std::chrono::steady_clock::now();
  kRunners[static_cast<std::size_t>(it - kSuites.begin())](options, r);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace domlab
