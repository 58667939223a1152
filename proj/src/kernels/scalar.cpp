#include <bit>

#include "kernel_impl.hpp"

namespace domlab::kernels::impl {

namespace {
constexpr std::size_t kWords = 4;
}

void scalar_masked_popcounts(const std::uint64_t* rows, std::size_t count,
                             const std::uint64_t* mask, std::uint16_t* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* r = rows + i * kWords;
    int c = 0;
    for (std::size_t w = 0; w < kWords; ++w) c += std::popcount(r[w] & mask[w]);
    out[i] = static_cast<std::uint16_t>(c);
  }
}

void scalar_live_rows(const std::uint64_t* rows, std::size_t count,
                      const std::uint64_t* covered, std::uint64_t* out) {
  for (std::size_t w = 0; w < kWords; ++w) out[w] = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* r = rows + i * kWords;
    std::uint64_t fresh = 0;
    for (std::size_t w = 0; w < kWords; ++w) fresh |= r[w] & ~covered[w];
    if (fresh != 0) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

void scalar_union_rows(const std::uint64_t* rows, std::size_t count,
                       const std::uint64_t* select, std::uint64_t* out) {
  for (std::size_t w = 0; w < kWords; ++w) out[w] = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (((select[i >> 6] >> (i & 63)) & 1U) == 0) continue;
    const std::uint64_t* r = rows + i * kWords;
    for (std::size_t w = 0; w < kWords; ++w) out[w] |= r[w];
  }
}

void scalar_equal_rows(const std::uint64_t* rows, std::size_t count,
                       const std::uint64_t* target, std::uint64_t* out) {
  for (std::size_t w = 0; w < kWords; ++w) out[w] = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* r = rows + i * kWords;
    std::uint64_t diff = 0;
    for (std::size_t w = 0; w < kWords; ++w) diff |= r[w] ^ target[w];
    if (diff == 0) out[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

}  // namespace domlab::kernels::impl
