#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "../support/oracles.hpp"
#include "domlab/enumeration.hpp"
#include "domlab/errors.hpp"
#include "domlab/extremal.hpp"
#include "domlab/random.hpp"

using namespace domlab;

namespace {

std::vector<Graph> drain(GraphStream& s) {
  std::vector<Graph> out;
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

struct TempFile {
  explicit TempFile(const std::string& contents) {
    path = ::testing::TempDir() + "domlab_" + std::to_string(counter++) + ".g6";
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
  static inline int counter = 0;
};

std::set<std::string> canonical_set(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(to_graph6(canonical_form(g)));
  return out;
}

}  // namespace

TEST(Enumerate, Examples) {
  EXPECT_EQ(drain(*enumerate_unlabeled(1)).size(), 1U);
  EXPECT_EQ(drain(*enumerate_unlabeled(4)).size(), 11U);
  EXPECT_EQ(drain(*enumerate_unlabeled(5)).size(), 34U);
  EXPECT_THROW(enumerate_unlabeled(11), PreconditionError);
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(unlabeled_codes(n).size(), oracle::unlabeled_count(n)) << n;
}

TEST(Enumerate, KnownCountsUpToEight) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(unlabeled_codes(n).size(), expected[n]) << n;
}

TEST(Enumerate, RepresentativesPairwiseNonIsomorphic) {
  const auto gs = drain(*enumerate_unlabeled(6));
  EXPECT_EQ(canonical_set(gs).size(), gs.size());
}

TEST(Stream, Examples) {
  TempFile two("@\nC~\n");
  EXPECT_EQ(drain(*stream_graph6(two.path)).size(), 2U);
  TempFile empty("");
  EXPECT_TRUE(drain(*stream_graph6(empty.path)).empty());
  EXPECT_THROW(stream_graph6("/nonexistent/file.g6"), PreconditionError);
}

TEST(Stream, MatchesBuiltinUpToIsomorphism) {
  std::string text;
  Rng rng(41);
  for (const auto& g : drain(*enumerate_unlabeled(5))) text += to_graph6(random_relabel(g, rng)) + "\n";
  TempFile file(text);
  EXPECT_EQ(canonical_set(drain(*stream_graph6(file.path))), canonical_set(drain(*enumerate_unlabeled(5))));
}

TEST(Stream, BadLinesReportedAndSkipped) {
  TempFile file("# comment\nC~\nC\n\r\nB?\nzzz\n");
  auto s = stream_graph6(file.path);
  const auto gs = drain(*s);
  EXPECT_EQ(gs.size(), 2U);
  ASSERT_EQ(s->errors().size(), 2U);
  EXPECT_EQ(s->errors()[0].line, 3U);
  EXPECT_EQ(s->errors()[1].line, 6U);
}

TEST(Search, Validation) {
  SearchSpec s;
  s.max_n = 11;
  EXPECT_THROW(validate(s), PreconditionError);
  s.max_n = 5;
  s.filters = {Filter::kBipartite, Filter::kNonBipartite};
  EXPECT_THROW(validate(s), PreconditionError);
  s.filters.clear();
  s.jobs = 0;
  EXPECT_THROW(validate(s), PreconditionError);
  EXPECT_EQ(parse_filter("false-twin-free"), Filter::kTwinFree);
  EXPECT_FALSE(parse_filter("planar"));
}

TEST(Search, NoValueThreeUpToSeven) {
  SearchSpec s;
  s.max_n = 7;
  s.target = 3;
  const auto r = run_search(s);
  EXPECT_TRUE(r.matches.empty());
  EXPECT_EQ(r.evaluated, 1043U);
}

TEST(Search, ValueTwoIsCompleteMultipartite) {
  SearchSpec s;
  s.max_n = 7;
  s.target = 2;
  const auto r = run_search(s);
  std::size_t multipartite = 0;
  for (int n = 2; n <= 7; ++n) {
    auto stream = enumerate_unlabeled(n);
    while (auto g = stream->next()) {
      const auto parts = complete_multipartite_parts(*g);
      multipartite += parts && parts->size() >= 2;
    }
  }
  EXPECT_EQ(r.matches.size(), multipartite);
  for (const auto& m : r.matches) EXPECT_EQ(m.classification, "complete-multipartite") << m.graph6;
}

TEST(Search, BipartiteTwinFreeValueFour) {
  SearchSpec s;
  s.max_n = 8;
  s.filters = {Filter::kBipartite, Filter::kTwinFree};
  s.target = 4;
  const auto r = run_search(s);
  ASSERT_EQ(r.matches.size(), 3U);  // K_{n,n}-M for n = 2, 3, 4
  for (const auto& m : r.matches) {
    const Graph g = parse_graph6(m.graph6);
    EXPECT_TRUE(recognize_knn_minus_matching(g));
    EXPECT_TRUE(certificate_holds(g, m.gamma_t));
    EXPECT_TRUE(certificate_holds(g, m.gamma_grt));
    for (Filter f : s.filters) EXPECT_TRUE(passes(g, f));
  }
  EXPECT_TRUE(std::is_sorted(r.matches.begin(), r.matches.end(),
                             [](const auto& a, const auto& b) { return a.graph6 < b.graph6; }));
}

TEST(Search, IndependentOfJobsChunksAndOrder) {
  SearchSpec base;
  base.max_n = 7;
  base.filters = {Filter::kConnected};
  const auto ref = run_search(base);
  EXPECT_FALSE(ref.matches.empty());

  auto key = [](const SearchReport& r) {
    std::vector<std::string> out;
    for (const auto& m : r.matches) out.push_back(m.graph6 + ":" + std::to_string(m.gamma_t.value));
    return out;
  };
  SearchSpec par = base;
  par.jobs = 4;
  par.chunk_size = 7;
  EXPECT_EQ(key(run_search(par)), key(ref));

  std::vector<Graph> all;
  for (int n = 1; n <= 7; ++n) {
    auto gs = drain(*enumerate_unlabeled(n));
    all.insert(all.end(), gs.begin(), gs.end());
  }
  Rng rng(42);
  std::shuffle(all.begin(), all.end(), rng);
  auto shuffled = stream_of(all);
  const auto r = run_search(par, *shuffled);
  EXPECT_EQ(key(r), key(ref));
  EXPECT_EQ(r.graphs_examined, ref.graphs_examined);
}

TEST(Search, StreamErrorsCarriedIntoReport) {
  TempFile file("C~\nbad line\nCr\n");
  SearchSpec s;
  s.stream_path = file.path;
  const auto r = run_search(s);
  EXPECT_EQ(r.graphs_examined, 2U);
  ASSERT_EQ(r.errors.size(), 1U);
  EXPECT_EQ(r.errors[0].line, 2U);
}
