#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "domlab/designs.hpp"
#include "domlab/enumeration.hpp"
#include "domlab/errors.hpp"
#include "domlab/extremal.hpp"
#include "domlab/hypergraph.hpp"
#include "domlab/kernels.hpp"
#include "domlab/verify.hpp"
#include "report_json.hpp"

namespace domlab::cli {
namespace {

enum Exit : int { kOk = 0, kPropertyFailure = 1, kUsage = 2, kInput = 3 };

// Flag-level problems found after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string graph6;
  std::string builtin;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph6", graph6, "Graph as a graph6 string");
    auto* b = cmd->add_option("--builtin", builtin, "fig1, knn-m:<n> or oa-graph:<q>");
    auto* f = cmd->add_option("--file", file, "File whose first graph6 line is read");
    g->excludes(b)->excludes(f);
    b->excludes(f);
  }

  Graph load() const {
    const int given = !graph6.empty() + !builtin.empty() + !file.empty();
    if (given != 1) throw UsageError("exactly one of --graph6, --builtin, --file is required");
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!builtin.empty()) return builtin_graph(builtin);
    std::ifstream in(file);
    if (!in) throw Error("cannot open \"" + file + "\"");
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() != '#') return parse_graph6(line);
    }
    throw Error("no graph in \"" + file + "\"");
  }
};

struct RunConfig {
  bool plain = false;
  std::uint64_t seed = 1;
  SolverOptions solver;
};

std::size_t memo_cap_from_env() {
  const char* raw = std::getenv("DOMLAB_MEMO_CAP");
  if (!raw || !*raw) return kDefaultMemoCap;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end) throw UsageError("DOMLAB_MEMO_CAP must be a non-negative integer");
  return value;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_witness(const char* label, const std::vector<int>& w) {
  std::cout << label << '=';
  for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
  std::cout << '\n';
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  GraphSource source;
  std::string which = "both";
  bool witness = false;
};

int cmd_solve(const SolveArgs& a, const RunConfig& cfg) {
  const Graph g = a.source.load();
  const bool want_t = a.which != "ggrt";
  const bool want_grt = a.which != "gt";
  std::optional<DominationCertificate> gt;
  std::optional<DominationCertificate> ggrt;
  if (want_t) gt = total_domination_number(g);
  if (want_grt) {
    const auto sides = bipartition(g);
    ggrt = sides ? grundy_bipartite(g, *sides, cfg.solver) : grundy_total_domination_number(g, cfg.solver);
  }

  if (cfg.plain) {
    if (gt) std::cout << "gamma_t=" << gt->value << '\n';
    if (ggrt) std::cout << "gamma_grt=" << ggrt->value << '\n';
    if (a.witness && gt) print_witness("gamma_t_witness", gt->witness);
    if (a.witness && ggrt) print_witness("gamma_grt_witness", ggrt->witness);
    return kOk;
  }
  Json j{{"schema_version", kSchemaVersion},
         {"command", "solve"},
         {"graph6", to_graph6(g)},
         {"order", g.order()},
         {"edges", g.edge_count()},
         {"kernels", kernels::active().name}};
  if (gt) j["gamma_t"] = to_json(*gt, a.witness);
  if (ggrt) j["gamma_grt"] = to_json(*ggrt, a.witness);
  emit(j);
  return kOk;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::string out;
};

std::pair<std::string, int> split_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("family must look like <name>:<parameter>");
  const std::string name = spec.substr(0, colon);
  const std::string param = spec.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), value);
  if (ec != std::errc{} || ptr != param.data() + param.size()) {
    throw UsageError("parameter of \"" + name + "\" must be an integer");
  }
  return {name, value};
}

int cmd_construct(const ConstructArgs& a, const RunConfig& cfg) {
  const auto [name, param] = split_family(a.family);
  std::string artifact;
  std::string kind;
  bool valid = true;
  if (name == "knn-m" || name == "oa-graph") {
    artifact = to_graph6(builtin_graph(a.family)) + "\n";
    kind = "graph6";
  } else if (name == "mols") {
    for (const auto& l : mols_family(param)) artifact += format_latin_square(l);
    kind = "latin-squares";
  } else if (name == "oa") {
    const auto oa = standard_oa(param);
    valid = validate_oa(oa).ok;
    artifact = format_oa(oa);
    kind = "orthogonal-array";
  } else if (name == "affine" || name == "projective") {
    const auto squares = mols_family(param);
    Design d = affine_plane_from_mols(squares);
    if (name == "projective") d = projective_from_affine(d);
    valid = validate_bibd(d).ok;
    artifact = format_design(d);
    kind = "design";
  } else {
    throw UsageError("unknown family \"" + name + "\"");
  }
  if (!valid) {
    std::cerr << "construction failed validation\n";
    return kPropertyFailure;
  }

  if (a.out.empty()) {
    std::cout << artifact;
    return kOk;
  }
  std::ofstream out(a.out);
  if (!out) throw Error("cannot write \"" + a.out + "\"");
  out << artifact;
  if (cfg.plain) {
    std::cout << "wrote " << kind << " to " << a.out << '\n';
  } else {
    emit({{"schema_version", kSchemaVersion},
          {"command", "construct"},
          {"family", a.family},
          {"kind", kind},
          {"out", a.out},
          {"valid", valid}});
  }
  return kOk;
}

// ---- extract-oa ------------------------------------------------------------

struct ExtractArgs {
  GraphSource source;
  std::string out;
};

int cmd_extract_oa(const ExtractArgs& a, const RunConfig& cfg) {
  const Graph g = a.source.load();
  const auto sides = bipartition(g);
  if (!sides) {
    std::cerr << "extract-oa: graph is not bipartite\n";
    return kPropertyFailure;
  }
  Extraction ex;
  try {
    ex = oa_from_graph(g, *sides);
  } catch (const ExtractionError& e) {
    if (cfg.plain) {
      std::cerr << "extract-oa: claim failed: " << e.what() << '\n';
    } else {
      emit({{"schema_version", kSchemaVersion},
            {"command", "extract-oa"},
            {"graph6", to_graph6(g)},
            {"ok", false},
            {"failed_claim", claim_name(e.claim())},
            {"detail", e.what()}});
      std::cerr << "extract-oa: claim failed: " << e.what() << '\n';
    }
    return kPropertyFailure;
  }
  const std::string text = format_oa(ex.oa);
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw Error("cannot write \"" + a.out + "\"");
    out << text;
  }
  if (cfg.plain) {
    std::cout << text;
    const auto& c = ex.context;
    std::cout << "k=" << c.k << " n=" << c.n << " ell=" << c.ell() << " a1=" << c.a1 << " a2=" << c.a2
              << " b_star=" << c.b_star << '\n';
    return kOk;
  }
  emit({{"schema_version", kSchemaVersion},
        {"command", "extract-oa"},
        {"graph6", to_graph6(g)},
        {"ok", true},
        {"oa", to_json(ex.oa)},
        {"oa_text", text},
        {"context", to_json(ex.context)}});
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int jobs = 1;
};

int cmd_verify(const VerifyArgs& a, const RunConfig& cfg) {
  std::vector<std::string_view> names;
  if (a.suite == "all") {
    names.assign(suite_names().begin(), suite_names().end());
  } else {
    names.push_back(a.suite);
  }
  VerifyOptions opts{cfg.seed, a.jobs, cfg.solver};
  Json suites = Json::array();
  bool ok = true;
  for (auto name : names) {
    const auto r = run_suite(name, opts);
    ok = ok && r.passed();
    if (cfg.plain) {
      std::cout << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
      for (const auto& c : r.checks) {
        std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << " (" << c.instances << ")";
        if (!c.passed) std::cout << ": " << c.detail << (c.counterexample ? " [" + *c.counterexample + "]" : "");
        std::cout << '\n';
      }
    } else {
      suites.push_back(to_json(r));
    }
  }
  if (!cfg.plain) {
    emit({{"schema_version", kSchemaVersion}, {"command", "verify"}, {"seed", cfg.seed}, {"passed", ok}, {"suites", suites}});
  }
  return ok ? kOk : kPropertyFailure;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  int max_n = 0;
  std::string stream;
  bool connected = false;
  bool bipartite = false;
  bool non_bipartite = false;
  bool twin_free = false;
  bool chordal = false;
  bool regular = false;
  std::string target = "all";
  int jobs = 1;
  std::size_t chunk = 1024;
};

SearchSpec build_spec(const SearchArgs& a, const RunConfig& cfg) {
  SearchSpec s;
  if (a.stream.empty() == (a.max_n == 0)) throw UsageError("give exactly one of --max-n and --stream");
  s.max_n = a.max_n;
  if (!a.stream.empty()) s.stream_path = a.stream;
  const std::pair<bool, Filter> flags[] = {{a.connected, Filter::kConnected}, {a.bipartite, Filter::kBipartite},
                                           {a.non_bipartite, Filter::kNonBipartite}, {a.twin_free, Filter::kTwinFree},
                                           {a.chordal, Filter::kChordal}, {a.regular, Filter::kRegular}};
  for (const auto& [on, f] : flags) {
    if (on) s.filters.push_back(f);
  }
  if (a.target != "all") {
    int t = 0;
    auto [ptr, ec] = std::from_chars(a.target.data(), a.target.data() + a.target.size(), t);
    if (ec != std::errc{} || ptr != a.target.data() + a.target.size()) {
      throw UsageError("--target must be an integer or \"all\"");
    }
    s.target = t;
  }
  s.jobs = a.jobs;
  s.chunk_size = a.chunk;
  s.solver = cfg.solver;
  try {
    validate(s);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  return s;
}

int cmd_search(const SearchArgs& a, const RunConfig& cfg) {
  const SearchSpec spec = build_spec(a, cfg);
  const SearchReport r = run_search(spec);
  if (cfg.plain) {
    std::cout << "examined=" << r.graphs_examined << " skipped_isolated=" << r.skipped_isolated
              << " filtered_out=" << r.filtered_out << " evaluated=" << r.evaluated
              << " matches=" << r.matches.size() << '\n';
    for (const auto& m : r.matches) {
      std::cout << m.graph6 << ' ' << m.gamma_t.value << ' ' << m.classification << '\n';
    }
    for (const auto& e : r.errors) std::cerr << "line " << e.line << ": " << e.message << '\n';
  } else {
    emit(to_json(r));
  }
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Total and Grundy total domination laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_flag("--plain", cfg.plain, "Plain text instead of JSON");
  app.add_option("--seed", cfg.seed, "Seed for randomized corpora");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Compute gamma_t and/or gamma_grt");
  solve.source.attach(s);
  s->add_option("--which", solve.which)->check(CLI::IsMember({"gt", "ggrt", "both"}));
  s->add_flag("--witness", solve.witness, "Include witnesses");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Emit a graph, MOLS, OA or design");
  c->add_option("family", construct.family, "knn-m:<n> oa-graph:<q> mols:<q> oa:<q> affine:<q> projective:<q>")
      ->required();
  c->add_option("--out", construct.out, "Write the artifact to a file");

  ExtractArgs extract;
  auto* e = app.add_subcommand("extract-oa", "Read an OA(k, k-1) off an extremal graph");
  extract.source.attach(e);
  e->add_option("--out", extract.out, "Write the OA text to a file");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a property suite");
  std::vector<std::string> suite_choices(suite_names().begin(), suite_names().end());
  suite_choices.emplace_back("all");
  v->add_option("suite", verify.suite)->required()->check(CLI::IsMember(suite_choices));
  v->add_option("--jobs", verify.jobs)->check(CLI::Range(1, 256));

  SearchArgs search;
  auto* r = app.add_subcommand("search", "Search for graphs with gamma_t = gamma_grt");
  r->add_option("--max-n", search.max_n, "Built-in enumeration bound")->check(CLI::Range(1, kBuiltinMaxOrder));
  r->add_option("--stream", search.stream, "graph6 file, one graph per line");
  r->add_flag("--connected", search.connected);
  r->add_flag("--bipartite", search.bipartite);
  r->add_flag("--non-bipartite", search.non_bipartite);
  r->add_flag("--twin-free,--false-twin-free", search.twin_free);
  r->add_flag("--chordal", search.chordal);
  r->add_flag("--regular", search.regular);
  r->add_option("--target", search.target, "Value, or \"all\" to report every equal pair");
  r->add_option("--jobs", search.jobs)->check(CLI::Range(1, 256));
  r->add_option("--chunk-size", search.chunk)->check(CLI::Range(1, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.solver.memo_cap = memo_cap_from_env();
    if (s->parsed()) return cmd_solve(solve, cfg);
    if (c->parsed()) return cmd_construct(construct, cfg);
    if (e->parsed()) return cmd_extract_oa(extract, cfg);
    if (v->parsed()) return cmd_verify(verify, cfg);
    return cmd_search(search, cfg);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kUsage;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInput;
  }
}

}  // namespace
}  // namespace domlab::cli

int main(int argc, char** argv) { return domlab::cli::run(argc, argv); }
