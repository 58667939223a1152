#include <algorithm>
#include <cmath>
#include <set>

#include "domlab/designs.hpp"
#include "domlab/errors.hpp"

namespace domlab {

Check validate_bibd(const Design& d) {
  const int v = d.points;
  const int k = d.block_size;
  if (!(v > k && k >= 2) || d.lambda < 1) {
    return {false, "parameters must satisfy v > k >= 2 and lambda >= 1"};
  }
  std::vector<int> pair_count(static_cast<std::size_t>(v * v), 0);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& block = d.blocks[b];
    if (static_cast<int>(block.size()) != k) {
      return {false, "block " + std::to_string(b) + " has " + std::to_string(block.size()) + " points, expected " +
                         std::to_string(k)};
    }
    std::set<int> distinct(block.begin(), block.end());
    if (static_cast<int>(distinct.size()) != k) return {false, "block " + std::to_string(b) + " repeats a point"};
    for (int x : block) {
      if (x < 0 || x >= v) return {false, "block " + std::to_string(b) + " names point " + std::to_string(x)};
    }
    for (int x : block) {
      for (int y : block) {
        if (x < y) ++pair_count[static_cast<std::size_t>(x * v + y)];
      }
    }
  }
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      const int c = pair_count[static_cast<std::size_t>(x * v + y)];
      if (c != d.lambda) {
        return {false, "pair {" + std::to_string(x) + "," + std::to_string(y) + "} lies in " + std::to_string(c) +
                           " blocks, expected " + std::to_string(d.lambda)};
      }
    }
  }
  return {};
}

Check validate_affine_plane(const Design& d, int q) {
  if (d.points != q * q || d.block_size != q || d.lambda != 1) return {false, "parameters differ from (q^2, q, 1)"};
  if (d.blocks.size() != static_cast<std::size_t>(q * q + q)) {
    return {false, "expected " + std::to_string(q * q + q) + " blocks"};
  }
  if (Check c = validate_bibd(d); !c) return c;
  std::vector<int> replication(static_cast<std::size_t>(d.points), 0);
  for (const auto& block : d.blocks) {
    for (int x : block) ++replication[x];
  }
  for (int x = 0; x < d.points; ++x) {
    if (replication[x] != q + 1) return {false, "point " + std::to_string(x) + " is not on q+1 blocks"};
  }
  return {};
}

Design affine_plane_from_mols(std::span<const LatinSquare> squares) {
  if (squares.empty()) throw PreconditionError("affine plane needs q-1 >= 1 latin squares");
  const int q = squares.front().order();
  if (static_cast<int>(squares.size()) != q - 1) throw PreconditionError("affine plane needs exactly q-1 squares");
  if (!are_mutually_orthogonal(squares)) throw PreconditionError("latin squares are not mutually orthogonal");
  Design d;
  d.points = q * q;
  d.block_size = q;
  d.lambda = 1;
  for (int i = 0; i < q; ++i) {
    std::vector<int> row;
    for (int j = 0; j < q; ++j) row.push_back(i * q + j);
    d.blocks.push_back(std::move(row));
  }
  for (int j = 0; j < q; ++j) {
    std::vector<int> col;
    for (int i = 0; i < q; ++i) col.push_back(i * q + j);
    d.blocks.push_back(std::move(col));
  }
  for (const auto& l : squares) {
    for (int c = 0; c < q; ++c) {
      std::vector<int> line;
      for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
          if (l.at(i, j) == c) line.push_back(i * q + j);
        }
      }
      d.blocks.push_back(std::move(line));
    }
  }
  return d;
}

std::vector<std::vector<int>> parallel_classes(const Design& affine) {
  std::vector<std::vector<int>> classes;
  std::vector<std::set<int>> members;
  for (std::size_t b = 0; b < affine.blocks.size(); ++b) {
    const std::set<int> pts(affine.blocks[b].begin(), affine.blocks[b].end());
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      const bool disjoint = std::none_of(pts.begin(), pts.end(), [&](int x) { return members[c].count(x) > 0; });
      if (disjoint) {
        classes[c].push_back(static_cast<int>(b));
        members[c].insert(pts.begin(), pts.end());
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({static_cast<int>(b)});
      members.push_back(pts);
    }
  }
  return classes;
}

Design projective_from_affine(const Design& affine) {
  const int q = static_cast<int>(std::lround(std::sqrt(static_cast<double>(affine.points))));
  if (const Check c = validate_affine_plane(affine, q); !c) {
    throw PreconditionError("not an affine plane: " + c.reason);
  }
  const auto classes = parallel_classes(affine);
  if (static_cast<int>(classes.size()) != q + 1) throw PreconditionError("affine plane must have q+1 parallel classes");
  Design d;
  d.points = q * q + q + 1;
  d.block_size = q + 1;
  d.lambda = 1;
  d.blocks = affine.blocks;
  std::vector<int> infinity;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int ideal = q * q + static_cast<int>(c);
    infinity.push_back(ideal);
    for (int b : classes[c]) d.blocks[b].push_back(ideal);
  }
  d.blocks.push_back(std::move(infinity));
  return d;
}

}  // namespace domlab
