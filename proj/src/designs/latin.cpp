#include <algorithm>

#include "domlab/designs.hpp"
#include "domlab/errors.hpp"

namespace domlab {

LatinSquare::LatinSquare(int q, std::vector<int> cells) : q_(q), cells_(std::move(cells)) {
  if (q_ < 1) throw PreconditionError("latin square order must be positive");
  if (cells_.size() != static_cast<std::size_t>(q_ * q_)) {
    throw PreconditionError("latin square needs q*q cells");
  }
  for (int i = 0; i < q_; ++i) {
    std::vector<bool> in_row(static_cast<std::size_t>(q_)), in_col(static_cast<std::size_t>(q_));
    for (int j = 0; j < q_; ++j) {
      const int r = at(i, j);
      const int c = at(j, i);
      if (r < 0 || r >= q_ || c < 0 || c >= q_) throw PreconditionError("latin square symbol out of range");
      if (in_row[r]) throw PreconditionError("row " + std::to_string(i) + " repeats symbol " + std::to_string(r));
      if (in_col[c]) throw PreconditionError("column " + std::to_string(i) + " repeats symbol " + std::to_string(c));
      in_row[r] = true;
      in_col[c] = true;
    }
  }
}

std::vector<LatinSquare> mols_family(int q) {
  const FieldTable f = field(q);
  std::vector<LatinSquare> out;
  for (int a = 1; a < q; ++a) {
    std::vector<int> cells(static_cast<std::size_t>(q * q));
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) cells[static_cast<std::size_t>(i * q + j)] = f.add(f.mul(a, i), j);
    }
    out.emplace_back(q, std::move(cells));
  }
  return out;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) throw PreconditionError("latin squares have different orders");
  const int q = a.order();
  std::vector<bool> seen(static_cast<std::size_t>(q * q));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      const auto key = static_cast<std::size_t>(a.at(i, j) * q + b.at(i, j));
      if (seen[key]) return false;
      seen[key] = true;
    }
  }
  return true;
}

bool are_mutually_orthogonal(std::span<const LatinSquare> squares) {
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      if (!are_orthogonal(squares[i], squares[j])) return false;
    }
  }
  return true;
}

}  // namespace domlab
