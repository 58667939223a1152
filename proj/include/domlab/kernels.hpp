#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "domlab/vertex_set.hpp"

// Row kernels over arrays of VertexSet.
//
// Every solver in the library spends its time asking the same few questions
// about a block of rows (neighborhoods, hyperedges) against one mask. Those
// questions are answered here by a scalar reference implementation and an
// AVX2 implementation; the active one is chosen once at runtime from CPUID
// and can be forced with DOMLAB_KERNELS=scalar|avx2.
//
// All kernels accept at most VertexSet::kCapacity rows.

namespace domlab::kernels {

enum class Backend { kScalar, kAvx2 };

/// Raw function table. Rows are passed as contiguous 4-word groups.
struct Table {
  Backend backend;
  const char* name;
  /// out[i] = |rows[i] & mask|
  void (*masked_popcounts)(const std::uint64_t* rows, std::size_t count,
                           const std::uint64_t* mask, std::uint16_t* out);
  /// bit i of out  <=>  rows[i] is not a subset of covered
  void (*live_rows)(const std::uint64_t* rows, std::size_t count,
                    const std::uint64_t* covered, std::uint64_t* out);
  /// out = union of rows[i] over i in select
  void (*union_rows)(const std::uint64_t* rows, std::size_t count,
                     const std::uint64_t* select, std::uint64_t* out);
  /// bit i of out  <=>  rows[i] == target
  void (*equal_rows)(const std::uint64_t* rows, std::size_t count,
                     const std::uint64_t* target, std::uint64_t* out);
};

/// Table for a specific backend, or nullptr when the CPU cannot run it or it
/// was not compiled in.
const Table* table(Backend b);

/// The table used by the typed wrappers below.
const Table& active();

/// Overrides the active backend (tests, benchmarks). Returns false and leaves
/// the selection unchanged if the backend is unavailable.
bool select(Backend b);

std::string_view backend_name(Backend b);

namespace detail {
inline const std::uint64_t* raw(std::span<const VertexSet> rows) {
  return rows.empty() ? nullptr : rows.front().data();
}
}  // namespace detail

inline void masked_popcounts(std::span<const VertexSet> rows, const VertexSet& mask,
                             std::span<std::uint16_t> out, const Table& t = active()) {
  t.masked_popcounts(detail::raw(rows), rows.size(), mask.data(), out.data());
}

inline VertexSet live_rows(std::span<const VertexSet> rows, const VertexSet& covered,
                           const Table& t = active()) {
  VertexSet out;
  t.live_rows(detail::raw(rows), rows.size(), covered.data(), out.data());
  return out;
}

inline VertexSet union_rows(std::span<const VertexSet> rows, const VertexSet& select,
                            const Table& t = active()) {
  VertexSet out;
  t.union_rows(detail::raw(rows), rows.size(), select.data(), out.data());
  return out;
}

inline VertexSet equal_rows(std::span<const VertexSet> rows, const VertexSet& target,
                            const Table& t = active()) {
  VertexSet out;
  t.equal_rows(detail::raw(rows), rows.size(), target.data(), out.data());
  return out;
}

}  // namespace domlab::kernels
