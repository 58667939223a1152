#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

#include "domlab/enumeration.hpp"
#include "domlab/errors.hpp"
#include "domlab/extremal.hpp"

namespace domlab {

std::string_view filter_name(Filter f) {
  switch (f) {
    case Filter::kConnected: return "connected";
    case Filter::kBipartite: return "bipartite";
    case Filter::kNonBipartite: return "non-bipartite";
    case Filter::kTwinFree: return "false-twin-free";
    case Filter::kChordal: return "chordal";
    case Filter::kRegular: return "regular";
  }
  return "?";
}

std::optional<Filter> parse_filter(std::string_view name) {
  for (Filter f : {Filter::kConnected, Filter::kBipartite, Filter::kNonBipartite, Filter::kTwinFree,
                   Filter::kChordal, Filter::kRegular}) {
    if (filter_name(f) == name) return f;
  }
  if (name == "twin-free") return Filter::kTwinFree;
  return std::nullopt;
}

bool passes(const Graph& g, Filter f) {
  switch (f) {
    case Filter::kConnected: return is_connected(g);
    case Filter::kBipartite: return bipartition(g).has_value();
    case Filter::kNonBipartite: return !bipartition(g).has_value();
    case Filter::kTwinFree: return is_false_twin_free(g);
    case Filter::kChordal: return is_chordal(g).chordal;
    case Filter::kRegular: return is_regular(g);
  }
  return false;
}

void validate(const SearchSpec& spec) {
  if (!spec.stream_path && (spec.max_n < 1 || spec.max_n > kBuiltinMaxOrder)) {
    throw PreconditionError("max_n must lie in [1, " + std::to_string(kBuiltinMaxOrder) +
                            "] for the built-in source; use a graph6 stream beyond that");
  }
  const auto has = [&](Filter f) { return std::find(spec.filters.begin(), spec.filters.end(), f) != spec.filters.end(); };
  if (has(Filter::kBipartite) && has(Filter::kNonBipartite)) {
    throw PreconditionError("bipartite and non-bipartite filters are mutually exclusive");
  }
  if (spec.jobs < 1) throw PreconditionError("jobs must be at least 1");
  if (spec.chunk_size < 1) throw PreconditionError("chunk size must be at least 1");
  if (spec.target && *spec.target < 0) throw PreconditionError("target must be non-negative");
}

void SearchReport::merge(SearchReport&& other) {
  graphs_examined += other.graphs_examined;
  skipped_isolated += other.skipped_isolated;
  filtered_out += other.filtered_out;
  evaluated += other.evaluated;
  std::move(other.matches.begin(), other.matches.end(), std::back_inserter(matches));
  std::move(other.errors.begin(), other.errors.end(), std::back_inserter(errors));
}

void SearchReport::finalize() {
  std::sort(matches.begin(), matches.end(),
            [](const SearchMatch& a, const SearchMatch& b) { return a.graph6 < b.graph6; });
  std::sort(errors.begin(), errors.end(),
            [](const StreamError& a, const StreamError& b) { return a.line < b.line; });
}

namespace {

void evaluate(const SearchSpec& spec, const Graph& g, SearchReport& part) {
  ++part.graphs_examined;
  if (has_isolated_vertex(g) || g.order() == 0) {
    ++part.skipped_isolated;
    return;
  }
  for (Filter f : spec.filters) {
    if (!passes(g, f)) {
      ++part.filtered_out;
      return;
    }
  }
  ++part.evaluated;
  auto gamma_t = total_domination_number(g);
  if (spec.target && gamma_t.value != *spec.target) return;
  const auto sides = bipartition(g);
  auto gamma_grt = sides ? grundy_bipartite(g, *sides, spec.solver) : grundy_total_domination_number(g, spec.solver);
  if (gamma_grt.value != gamma_t.value) return;
  SearchMatch m;
  m.graph6 = to_graph6(g);
  m.classification = classify_equal(g, spec.solver).label;
  m.gamma_t = std::move(gamma_t);
  m.gamma_grt = std::move(gamma_grt);
  part.matches.push_back(std::move(m));
}

}  // namespace

SearchReport run_search(const SearchSpec& spec, GraphStream& source) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  std::mutex source_mutex;
  std::mutex report_mutex;
  SearchReport total;

  auto worker = [&] {
    SearchReport local;
    std::vector<Graph> chunk;
    chunk.reserve(spec.chunk_size);
    while (true) {
      chunk.clear();
      {
        std::lock_guard lock(source_mutex);
        while (chunk.size() < spec.chunk_size) {
          auto g = source.next();
          if (!g) break;
          chunk.push_back(std::move(*g));
        }
      }
      if (chunk.empty()) break;
      for (const auto& g : chunk) evaluate(spec, g, local);
    }
    std::lock_guard lock(report_mutex);
    total.merge(std::move(local));
  };

  if (spec.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < spec.jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  total.errors = source.errors();
  total.spec = spec;
  total.finalize();
  total.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return total;
}

SearchReport run_search(const SearchSpec& spec) {
  validate(spec);
  auto source = spec.stream_path ? stream_graph6(*spec.stream_path) : enumerate_up_to(spec.max_n);
  return run_search(spec, *source);
}

}  // namespace domlab
