#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "domlab/designs.hpp"
#include "domlab/errors.hpp"

using namespace domlab;

namespace {

OrthogonalArray oa32() { return {3, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}}; }

// Every ordered pair over every column pair, counted directly.
bool pairs_once(const OrthogonalArray& a) {
  for (int c1 = 0; c1 < a.columns; ++c1) {
    for (int c2 = c1 + 1; c2 < a.columns; ++c2) {
      std::set<std::pair<int, int>> seen;
      for (const auto& r : a.rows) seen.emplace(r[c1], r[c2]);
      if (seen.size() != a.rows.size() || static_cast<int>(seen.size()) != a.symbols * a.symbols) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Field, SmallTables) {
  const auto f2 = field(2);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      EXPECT_EQ(f2.add(a, b), a ^ b);
      EXPECT_EQ(f2.mul(a, b), a & b);
    }
  }
  const auto f3 = field(3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      EXPECT_EQ(f3.add(a, b), (a + b) % 3);
      EXPECT_EQ(f3.mul(a, b), a * b % 3);
    }
  }
  const auto f4 = field(4);  // 2 stands for x
  EXPECT_EQ(f4.add(1, 1), 0);
  EXPECT_EQ(f4.mul(2, 2), 3);  // x*x = x+1
}

TEST(Field, AxiomsForEverySupportedOrder) {
  for (int q : supported_orders()) {
    const auto f = field(q);
    for (int a = 0; a < q; ++a) {
      bool has_neg = false;
      bool has_inv = a == 0;
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        has_neg = has_neg || f.add(a, b) == 0;
        has_inv = has_inv || f.mul(a, b) == 1;
        for (int c = 0; c < q; ++c) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          EXPECT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        }
      }
      EXPECT_TRUE(has_neg && has_inv) << "q=" << q << " a=" << a;
    }
  }
}

TEST(Field, UnsupportedOrders) {
  for (int q : {0, 1, 6, 10, 11, 16}) EXPECT_THROW(field(q), UnsupportedOrder);
  EXPECT_THROW(mols_family(6), UnsupportedOrder);
}

TEST(Latin, Validation) {
  EXPECT_THROW(LatinSquare(2, {0, 1, 0, 1}), PreconditionError);
  EXPECT_THROW(LatinSquare(2, {0, 1, 1}), PreconditionError);
  EXPECT_NO_THROW(LatinSquare(2, {0, 1, 1, 0}));
}

TEST(Mols, Examples) {
  const auto two = mols_family(2);
  ASSERT_EQ(two.size(), 1U);
  EXPECT_EQ(two[0], LatinSquare(2, {0, 1, 1, 0}));

  const auto three = mols_family(3);
  ASSERT_EQ(three.size(), 2U);
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) pairs.emplace(three[0].at(i, j), three[1].at(i, j));
  }
  EXPECT_EQ(pairs.size(), 9U);
  EXPECT_TRUE(are_orthogonal(three[0], three[1]));

  const auto five = mols_family(5);
  ASSERT_EQ(five.size(), 4U);
  EXPECT_TRUE(are_mutually_orthogonal(five));
}

TEST(Mols, OrthogonalityExamples) {
  for (int q : supported_orders()) {
    const auto f = mols_family(q);
    EXPECT_FALSE(are_orthogonal(f[0], f[0]));
    EXPECT_EQ(static_cast<int>(f.size()), q - 1);
    EXPECT_TRUE(are_mutually_orthogonal(f)) << "q=" << q;
  }
  const LatinSquare a(2, {0, 1, 1, 0});
  const LatinSquare b(2, {1, 0, 0, 1});
  EXPECT_FALSE(are_orthogonal(a, b));
  EXPECT_FALSE(are_orthogonal(a, a));
  EXPECT_THROW(are_orthogonal(a, mols_family(3)[0]), PreconditionError);
}

TEST(OrthogonalArray, Examples) {
  const auto oa = mols_to_oa(mols_family(2));
  EXPECT_EQ(sorted_rows(oa), oa32());
  EXPECT_TRUE(validate_oa(oa32()).ok);
  const auto back = oa_to_mols(oa32());
  ASSERT_EQ(back.size(), 1U);
  EXPECT_EQ(back[0], mols_family(2)[0]);

  const auto oa65 = mols_to_oa(mols_family(5));
  EXPECT_EQ(oa65.columns, 6);
  EXPECT_EQ(oa65.rows.size(), 25U);
  EXPECT_TRUE(validate_oa(oa65).ok);
}

TEST(OrthogonalArray, FlippedSymbolFails) {
  auto bad = oa32();
  bad.rows[0][2] = 1;
  const Check c = validate_oa(bad);
  EXPECT_FALSE(c.ok);
  EXPECT_FALSE(c.reason.empty());
}

TEST(OrthogonalArray, RejectsNonOrthogonalSquares) {
  const auto f = mols_family(3);
  const std::vector<LatinSquare> same{f[0], f[0]};
  EXPECT_THROW(mols_to_oa(same), PreconditionError);
}

TEST(OrthogonalArray, RoundTripsAndCoincidence) {
  for (int q : supported_orders()) {
    const auto fam = mols_family(q);
    const auto oa = mols_to_oa(fam);
    EXPECT_TRUE(validate_oa(oa).ok);
    EXPECT_TRUE(pairs_once(oa));
    EXPECT_EQ(oa_to_mols(oa), fam) << "q=" << q;
    // Shuffle rows: the inverse normalizes on the first two columns.
    auto shuffled = oa;
    std::reverse(shuffled.rows.begin(), shuffled.rows.end());
    EXPECT_EQ(sorted_rows(mols_to_oa(oa_to_mols(shuffled))), sorted_rows(oa));
    EXPECT_TRUE(rows_coincide_exactly_once(oa)) << "q=" << q;
    for (int c = 0; c < oa.columns; ++c) {
      std::vector<int> counts(static_cast<std::size_t>(q), 0);
      for (const auto& r : oa.rows) ++counts[r[c]];
      for (int n : counts) EXPECT_EQ(n, q);
    }
  }
}

TEST(Planes, SmallOrders) {
  const Design a2 = affine_plane_from_mols(mols_family(2));
  EXPECT_EQ(a2.points, 4);
  EXPECT_EQ(a2.blocks.size(), 6U);
  EXPECT_EQ(a2.block_size, 2);
  EXPECT_TRUE(validate_affine_plane(a2, 2).ok);
  const Design fano = projective_from_affine(a2);
  EXPECT_EQ(fano.points, 7);
  EXPECT_EQ(fano.blocks.size(), 7U);
  EXPECT_EQ(fano.block_size, 3);
  EXPECT_TRUE(validate_bibd(fano).ok);
  for (int x = 0; x < 7; ++x) {
    for (int y = x + 1; y < 7; ++y) {
      int lines = 0;
      for (const auto& b : fano.blocks) {
        lines += std::count(b.begin(), b.end(), x) && std::count(b.begin(), b.end(), y);
      }
      EXPECT_EQ(lines, 1);
    }
  }
  Design broken = fano;
  broken.blocks.pop_back();
  EXPECT_FALSE(validate_bibd(broken).ok);

  const Design a3 = affine_plane_from_mols(mols_family(3));
  EXPECT_EQ(a3.points, 9);
  EXPECT_EQ(a3.blocks.size(), 12U);
  const Design p3 = projective_from_affine(a3);
  EXPECT_EQ(p3.points, 13);
  EXPECT_EQ(p3.block_size, 4);
  EXPECT_TRUE(validate_bibd(p3).ok);
}

TEST(Planes, AllSupportedOrders) {
  for (int q : supported_orders()) {
    const Design a = affine_plane_from_mols(mols_family(q));
    EXPECT_TRUE(validate_affine_plane(a, q).ok) << "q=" << q;
    EXPECT_EQ(parallel_classes(a).size(), static_cast<std::size_t>(q + 1));
    const Design p = projective_from_affine(a);
    EXPECT_EQ(p.points, q * q + q + 1);
    EXPECT_EQ(p.block_size, q + 1);
    EXPECT_EQ(p.lambda, 1);
    EXPECT_TRUE(validate_bibd(p).ok) << "q=" << q;
  }
}

TEST(Formats, RoundTrips) {
  std::istringstream oa_in(format_oa(oa32()));
  EXPECT_EQ(parse_oa(oa_in), oa32());
  EXPECT_EQ(format_oa(oa32()).substr(0, 4), "3 2\n");

  const auto sq = mols_family(3)[1];
  std::istringstream sq_in(format_latin_square(sq));
  EXPECT_EQ(parse_latin_square(sq_in), sq);

  const Design fano = projective_from_affine(affine_plane_from_mols(mols_family(2)));
  const std::string text = format_design(fano);
  EXPECT_EQ(text.substr(0, text.find('\n')), "7 7 3 1");
  std::istringstream d_in(text);
  const Design back = parse_design(d_in);
  EXPECT_EQ(back.blocks, fano.blocks);

  std::istringstream bad("3 2\n0 0 0\n0 1\n");
  EXPECT_THROW(parse_oa(bad), FormatError);
}
