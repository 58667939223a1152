#pragma once

// Exact search engines shared by the domination and hypergraph modules.
// Both work on a family of "rows" (vertex neighborhoods or hyperedges) over a
// point universe of at most 256 elements; at most 256 rows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "domlab/vertex_set.hpp"

namespace domlab::detail {

struct CoverResult {
  int size = 0;
  std::vector<int> rows;  // ascending
  std::uint64_t nodes = 0;
};

/// Minimum number of rows whose union contains `universe`.
/// Branch and bound: greedy initial bound, ceil(remaining / max gain) lower
/// bound, branching on the uncovered point with the fewest covering rows.
/// Precondition: the union of all rows contains `universe`.
CoverResult min_set_cover(std::span<const VertexSet> rows, const VertexSet& universe);

struct SequenceResult {
  int length = 0;
  std::vector<int> order;       // row indices in play order
  std::vector<int> footprints;  // smallest new point contributed by each row
  std::uint64_t nodes = 0;
  std::size_t memo_entries = 0;
  bool memo_saturated = false;
};

/// Longest sequence of distinct rows in which every row contains a point not
/// in the union of the earlier rows. Exact depth-first search memoized on the
/// covered set (the set of playable rows depends only on it). Once the memo
/// holds `memo_cap` states it stops growing and the search continues as plain
/// branch and bound on min(uncovered points, live rows).
///
/// The reported order is the lexicographically smallest optimal sequence.
SequenceResult longest_legal_sequence(std::span<const VertexSet> rows, std::size_t memo_cap);

/// Open-addressing map from covered-set to best extension length.
class StateMemo {
 public:
  static constexpr std::uint16_t kMissing = 0xffff;

  explicit StateMemo(std::size_t cap);

  std::uint16_t find(const VertexSet& key) const;
  void insert(const VertexSet& key, std::uint16_t value);

  std::size_t size() const { return size_; }
  bool saturated() const { return size_ >= cap_; }

 private:
  void grow();

  std::size_t cap_;
  std::size_t size_ = 0;
  std::size_t mask_ = 0;
  std::vector<VertexSet> keys_;
  std::vector<std::uint16_t> values_;
};

}  // namespace domlab::detail
