#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace domlab {

/// Orders with a built-in field: 2, 3, 4, 5, 7, 8, 9.
std::span<const int> supported_orders();
bool is_supported_order(int q);

/// Addition and multiplication tables of GF(q). Elements are 0..q-1; for
/// q = p^m the element sum c_i p^i stands for the polynomial sum c_i x^i.
class FieldTable {
 public:
  int order() const { return q_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }

 private:
  friend FieldTable field(int q);
  FieldTable(int q, std::vector<int> add, std::vector<int> mul);
  int q_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

/// Tables for GF(q); prime orders use arithmetic mod q, 4 and 8 use
/// x^2+x+1 and x^3+x+1 over GF(2), 9 uses x^2+1 over GF(3). The field
/// axioms are checked exhaustively before returning. Throws UnsupportedOrder.
FieldTable field(int q);

class LatinSquare {
 public:
  /// Throws PreconditionError unless every row and column is a permutation
  /// of 0..q-1. `cells` is row-major.
  LatinSquare(int q, std::vector<int> cells);

  int order() const { return q_; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row * q_ + col)]; }
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  int q_;
  std::vector<int> cells_;
};

/// L_a(i, j) = a*i + j over GF(q) for a = 1..q-1.
std::vector<LatinSquare> mols_family(int q);

/// True iff the q^2 superimposed pairs are distinct. Throws
/// PreconditionError on an order mismatch.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);
bool are_mutually_orthogonal(std::span<const LatinSquare> squares);

/// q^2 rows of length s over 0..q-1.
struct OrthogonalArray {
  int columns = 0;
  int symbols = 0;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const OrthogonalArray&, const OrthogonalArray&) = default;
};

/// Outcome of a design validator; names the first violation found.
struct Check {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Every ordered symbol pair appears exactly once in every pair of columns,
/// and every symbol appears exactly q times in every column.
Check validate_oa(const OrthogonalArray& a);

/// Row (i, j, L_1(i,j), ..., L_{s-2}(i,j)) for every cell, row-major.
/// Throws PreconditionError if the squares are not mutually orthogonal.
OrthogonalArray mols_to_oa(std::span<const LatinSquare> squares);

/// Inverse of mols_to_oa: column t >= 2 read as a square indexed by the
/// first two columns. Throws PreconditionError on an invalid array.
std::vector<LatinSquare> oa_to_mols(const OrthogonalArray& a);

/// OA(q+1, q) property: any two distinct rows agree in exactly one column.
bool rows_coincide_exactly_once(const OrthogonalArray& a);

/// Rows sorted lexicographically, for order-insensitive comparison.
OrthogonalArray sorted_rows(OrthogonalArray a);

/// Incidence structure with declared (v, k, lambda).
struct Design {
  int points = 0;
  int block_size = 0;
  int lambda = 0;
  std::vector<std::vector<int>> blocks;
};

/// Exhaustive check of a (v, k, lambda)-BIBD, v > k >= 2.
Check validate_bibd(const Design& d);

/// BIBD check plus the affine-plane counts for order q: q^2 points, q^2+q
/// blocks of size q, every point on q+1 blocks.
Check validate_affine_plane(const Design& d, int q);

/// Affine plane of order q on points i*q + j: the q rows, the q columns and,
/// for each square, the q symbol classes. Needs q-1 MOLS(q).
Design affine_plane_from_mols(std::span<const LatinSquare> squares);

/// Adds one point at infinity per parallel class and the line at infinity.
Design projective_from_affine(const Design& affine);

/// Blocks of an affine plane grouped into parallel classes, in order of
/// first appearance.
std::vector<std::vector<int>> parallel_classes(const Design& affine);

// Text formats. All symbols and points are 0-based.
std::string format_oa(const OrthogonalArray& a);        // "s q" + q^2 rows
OrthogonalArray parse_oa(std::istream& in);
std::string format_latin_square(const LatinSquare& l);  // "q" + q rows
LatinSquare parse_latin_square(std::istream& in);
std::string format_design(const Design& d);             // "v b k lambda" + b rows
Design parse_design(std::istream& in);

}  // namespace domlab
