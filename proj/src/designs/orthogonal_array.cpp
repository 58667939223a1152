#include <algorithm>

#include "domlab/designs.hpp"
#include "domlab/errors.hpp"

namespace domlab {

namespace {

Check fail(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

Check validate_oa(const OrthogonalArray& a) {
  const int s = a.columns;
  const int q = a.symbols;
  if (s < 2 || q < 1) return fail("need s >= 2 and q >= 1");
  if (a.rows.size() != static_cast<std::size_t>(q * q)) {
    return fail("expected " + std::to_string(q * q) + " rows, found " + std::to_string(a.rows.size()));
  }
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    if (a.rows[r].size() != static_cast<std::size_t>(s)) return fail("row " + std::to_string(r) + " has wrong length");
    for (int x : a.rows[r]) {
      if (x < 0 || x >= q) return fail("row " + std::to_string(r) + " has symbol outside 0.." + std::to_string(q - 1));
    }
  }
  for (int c1 = 0; c1 < s; ++c1) {
    for (int c2 = c1 + 1; c2 < s; ++c2) {
      std::vector<int> hits(static_cast<std::size_t>(q * q), 0);
      for (const auto& row : a.rows) ++hits[static_cast<std::size_t>(row[c1] * q + row[c2])];
      for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
          const int h = hits[static_cast<std::size_t>(x * q + y)];
          if (h != 1) {
            return fail("columns (" + std::to_string(c1) + "," + std::to_string(c2) + ") contain pair (" +
                        std::to_string(x) + "," + std::to_string(y) + ") " + std::to_string(h) + " times");
          }
        }
      }
    }
  }
  for (int c = 0; c < s; ++c) {
    std::vector<int> count(static_cast<std::size_t>(q), 0);
    for (const auto& row : a.rows) ++count[row[c]];
    for (int x = 0; x < q; ++x) {
      if (count[x] != q) {
        return fail("column " + std::to_string(c) + " holds symbol " + std::to_string(x) + " " +
                    std::to_string(count[x]) + " times");
      }
    }
  }
  return {};
}

OrthogonalArray mols_to_oa(std::span<const LatinSquare> squares) {
  if (squares.empty()) throw PreconditionError("mols_to_oa needs at least one latin square");
  if (!are_mutually_orthogonal(squares)) throw PreconditionError("latin squares are not mutually orthogonal");
  const int q = squares.front().order();
  OrthogonalArray a;
  a.columns = static_cast<int>(squares.size()) + 2;
  a.symbols = q;
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      std::vector<int> row{i, j};
      for (const auto& l : squares) row.push_back(l.at(i, j));
      a.rows.push_back(std::move(row));
    }
  }
  return a;
}

std::vector<LatinSquare> oa_to_mols(const OrthogonalArray& a) {
  if (const Check c = validate_oa(a); !c) throw PreconditionError("invalid orthogonal array: " + c.reason);
  const int q = a.symbols;
  std::vector<LatinSquare> out;
  for (int t = 2; t < a.columns; ++t) {
    std::vector<int> cells(static_cast<std::size_t>(q * q));
    for (const auto& row : a.rows) cells[static_cast<std::size_t>(row[0] * q + row[1])] = row[t];
    out.emplace_back(q, std::move(cells));
  }
  return out;
}

bool rows_coincide_exactly_once(const OrthogonalArray& a) {
  for (std::size_t r1 = 0; r1 < a.rows.size(); ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < a.rows.size(); ++r2) {
      int same = 0;
      for (int c = 0; c < a.columns; ++c) same += a.rows[r1][c] == a.rows[r2][c] ? 1 : 0;
      if (same != 1) return false;
    }
  }
  return true;
}

OrthogonalArray sorted_rows(OrthogonalArray a) {
  std::sort(a.rows.begin(), a.rows.end());
  return a;
}

}  // namespace domlab
