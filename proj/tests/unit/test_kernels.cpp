#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "domlab/kernels.hpp"

using domlab::VertexSet;
namespace k = domlab::kernels;

namespace {

VertexSet random_set(std::mt19937_64& rng, double density) {
  VertexSet s;
  std::bernoulli_distribution bit(density);
  for (int v = 0; v < VertexSet::kCapacity; ++v) {
    if (bit(rng)) s.set(v);
  }
  return s;
}

struct Backends : ::testing::Test {
  void SetUp() override {
    scalar = k::table(k::Backend::kScalar);
    avx2 = k::table(k::Backend::kAvx2);
    ASSERT_NE(scalar, nullptr);
    if (!avx2) GTEST_SKIP() << "AVX2 backend unavailable on this machine";
  }
  const k::Table* scalar = nullptr;
  const k::Table* avx2 = nullptr;
};

}  // namespace

TEST(VertexSet, BasicOps) {
  auto s = VertexSet::of({0, 63, 64, 200, 255});
  EXPECT_EQ(s.count(), 5);
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.next(63), 64);
  EXPECT_EQ(s.next(255), -1);
  EXPECT_EQ(s.to_string(), "{0,63,64,200,255}");
  EXPECT_EQ(VertexSet::range(65).count(), 65);
  EXPECT_EQ(VertexSet::range(256).count(), 256);
  EXPECT_TRUE(VertexSet::of({1, 2}).subset_of(VertexSet::range(3)));
  EXPECT_FALSE((VertexSet::range(3) - VertexSet::of({0, 1, 2})).any());
}

TEST_F(Backends, MaskedPopcountsMatchScalar) {
  std::mt19937_64 rng(11);
  for (int count = 0; count <= 256; count += (count < 16 ? 1 : 37)) {
    for (double d : {0.05, 0.5, 0.95}) {
      std::vector<VertexSet> rows;
      for (int i = 0; i < count; ++i) rows.push_back(random_set(rng, d));
      const VertexSet mask = random_set(rng, 0.5);
      std::vector<std::uint16_t> a(static_cast<std::size_t>(count) + 1, 0xAAAA);
      std::vector<std::uint16_t> b(a);
      k::masked_popcounts(rows, mask, a, *scalar);
      k::masked_popcounts(rows, mask, b, *avx2);
      EXPECT_EQ(a, b) << "count=" << count;
      for (int i = 0; i < count; ++i) EXPECT_EQ(a[i], (rows[i] & mask).count());
    }
  }
}

TEST_F(Backends, RowPredicatesMatchScalar) {
  std::mt19937_64 rng(12);
  for (int count = 0; count <= 256; count += (count < 16 ? 1 : 29)) {
    std::vector<VertexSet> rows;
    for (int i = 0; i < count; ++i) rows.push_back(random_set(rng, 0.1));
    // Plant duplicates and subsets so the equal/live paths see both answers.
    const VertexSet target = count ? rows[0] : VertexSet{};
    for (int i = 3; i < count; i += 5) rows[i] = target;
    const VertexSet covered = random_set(rng, 0.9) | target;
    const VertexSet select = random_set(rng, 0.3) & VertexSet::range(count);

    EXPECT_EQ(k::live_rows(rows, covered, *scalar), k::live_rows(rows, covered, *avx2));
    EXPECT_EQ(k::union_rows(rows, select, *scalar), k::union_rows(rows, select, *avx2));
    EXPECT_EQ(k::equal_rows(rows, target, *scalar), k::equal_rows(rows, target, *avx2));

    VertexSet live;
    VertexSet eq;
    VertexSet uni;
    for (int i = 0; i < count; ++i) {
      if (!rows[i].subset_of(covered)) live.set(i);
      if (rows[i] == target) eq.set(i);
      if (select.test(i)) uni |= rows[i];
    }
    EXPECT_EQ(k::live_rows(rows, covered, *scalar), live);
    EXPECT_EQ(k::equal_rows(rows, target, *scalar), eq);
    EXPECT_EQ(k::union_rows(rows, select, *scalar), uni);
  }
}

TEST_F(Backends, SelectSwitchesActiveTable) {
  const k::Backend before = k::active().backend;
  EXPECT_TRUE(k::select(k::Backend::kScalar));
  EXPECT_EQ(k::active().backend, k::Backend::kScalar);
  EXPECT_TRUE(k::select(k::Backend::kAvx2));
  EXPECT_EQ(k::active().backend, k::Backend::kAvx2);
  EXPECT_EQ(k::backend_name(k::Backend::kScalar), "scalar");
  k::select(before);
}
