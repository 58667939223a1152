#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Largest order the built-in generator produces.
inline constexpr int kBuiltinMaxOrder = 10;

struct StreamError {
  std::size_t line = 0;
  std::string message;
};

/// Pull-based source of graphs. Not thread-safe; callers serialize next().
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  /// Next graph, or nullopt at the end. Undecodable entries are recorded in
  /// errors() and skipped.
  virtual std::optional<Graph> next() = 0;
  const std::vector<StreamError>& errors() const { return errors_; }

 protected:
  std::vector<StreamError> errors_;
};

/// Sorted canonical codes (pack_upper_triangle of canonical_form) of all
/// unlabeled graphs on n vertices. Every graph on n vertices is a graph on
/// n-1 vertices plus a vertex of maximum degree, so candidates are the
/// representatives of order n-1 extended by such a vertex, deduplicated by
/// canonical form. Results are cached per n. Throws PreconditionError for
/// n outside [0, 10].
const std::vector<std::uint64_t>& unlabeled_codes(int n);

/// One representative per isomorphism class on n vertices, in code order.
std::unique_ptr<GraphStream> enumerate_unlabeled(int n);

/// enumerate_unlabeled(1), ..., enumerate_unlabeled(max_n) back to back.
std::unique_ptr<GraphStream> enumerate_up_to(int max_n);

/// Lazily decodes one graph6 per line. Blank lines and lines starting with
/// '#' are ignored. Throws PreconditionError if the file cannot be opened.
std::unique_ptr<GraphStream> stream_graph6(const std::string& path);

/// Stream over graphs already in memory (tests, callers with their own
/// generators).
std::unique_ptr<GraphStream> stream_of(std::vector<Graph> graphs);

enum class Filter { kConnected, kBipartite, kNonBipartite, kTwinFree, kChordal, kRegular };

std::string_view filter_name(Filter f);
std::optional<Filter> parse_filter(std::string_view name);
bool passes(const Graph& g, Filter f);

struct SearchSpec {
  /// Built-in enumeration bound; ignored when stream_path is set.
  int max_n = 0;
  std::optional<std::string> stream_path;
  std::vector<Filter> filters;
  /// Report graphs with gamma_t = gamma_grt = target; nullopt reports every
  /// graph where the two agree.
  std::optional<int> target;
  int jobs = 1;
  std::size_t chunk_size = 1024;
  SolverOptions solver;
};

/// Throws PreconditionError on an invalid spec (max_n outside [1, 10] for
/// the built-in source, bipartite together with non-bipartite, jobs < 1).
void validate(const SearchSpec& spec);

struct SearchMatch {
  std::string graph6;
  DominationCertificate gamma_t;
  DominationCertificate gamma_grt;
  std::string classification;
};

struct SearchReport {
  SearchSpec spec;
  std::uint64_t graphs_examined = 0;
  std::uint64_t skipped_isolated = 0;
  std::uint64_t filtered_out = 0;
  std::uint64_t evaluated = 0;
  /// Sorted by graph6 string.
  std::vector<SearchMatch> matches;
  /// Sorted by line.
  std::vector<StreamError> errors;
  double elapsed_ms = 0;

  /// Folds another partial report in; order-insensitive once finalized.
  void merge(SearchReport&& other);
  void finalize();
};

/// Filters the source, solves both invariants on the survivors and collects
/// the graphs where they agree (at the target value, if one is set). Graphs
/// with isolated vertices are counted and skipped. Work is handed out in
/// chunks of spec.chunk_size to spec.jobs workers; the result does not
/// depend on either.
SearchReport run_search(const SearchSpec& spec);
SearchReport run_search(const SearchSpec& spec, GraphStream& source);

}  // namespace domlab
