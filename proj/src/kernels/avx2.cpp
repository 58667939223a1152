// Compiled with -mavx2 -mpopcnt. Called only after CPUID confirms support.

#include <immintrin.h>

#include "kernel_impl.hpp"

namespace domlab::kernels::impl {

namespace {

constexpr std::size_t kWords = 4;

inline __m256i load_row(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Per-64-bit-lane popcounts (Mula nibble lookup + SAD).
inline __m256i lane_popcounts(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibbles = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_nibbles);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibbles);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t hsum_lanes(__m256i v) {
  const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

}  // namespace

void avx2_masked_popcounts(const std::uint64_t* rows, std::size_t count,
                           const std::uint64_t* mask, std::uint16_t* out) {
  const __m256i m = load_row(mask);
  std::size_t i = 0;
  // Four rows per step: each lane count is <= 64, so the four rows can be
  // packed into 16-bit fields and reduced with a single horizontal sum.
  for (; i + 4 <= count; i += 4) {
    const std::uint64_t* r = rows + i * kWords;
    const __m256i c0 = lane_popcounts(_mm256_and_si256(load_row(r), m));
    const __m256i c1 = lane_popcounts(_mm256_and_si256(load_row(r + 4), m));
    const __m256i c2 = lane_popcounts(_mm256_and_si256(load_row(r + 8), m));
    const __m256i c3 = lane_popcounts(_mm256_and_si256(load_row(r + 12), m));
    __m256i packed = _mm256_or_si256(c0, _mm256_slli_epi64(c1, 16));
    packed = _mm256_or_si256(packed, _mm256_slli_epi64(c2, 32));
    packed = _mm256_or_si256(packed, _mm256_slli_epi64(c3, 48));
    const std::uint64_t fields = hsum_lanes(packed);
    out[i] = static_cast<std::uint16_t>(fields & 0xffff);
    out[i + 1] = static_cast<std::uint16_t>((fields >> 16) & 0xffff);
    out[i + 2] = static_cast<std::uint16_t>((fields >> 32) & 0xffff);
    out[i + 3] = static_cast<std::uint16_t>(fields >> 48);
  }
  for (; i < count; ++i) {
    const __m256i c = lane_popcounts(_mm256_and_si256(load_row(rows + i * kWords), m));
    out[i] = static_cast<std::uint16_t>(hsum_lanes(c));
  }
}

void avx2_live_rows(const std::uint64_t* rows, std::size_t count,
                    const std::uint64_t* covered, std::uint64_t* out) {
  const __m256i cov = load_row(covered);
  std::uint64_t acc[kWords] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < count; ++i) {
    // testc: 1 iff (~cov & row) == 0, i.e. the row adds nothing.
    const int dead = _mm256_testc_si256(cov, load_row(rows + i * kWords));
    acc[i >> 6] |= static_cast<std::uint64_t>(dead ^ 1) << (i & 63);
  }
  for (std::size_t w = 0; w < kWords; ++w) out[w] = acc[w];
}

void avx2_union_rows(const std::uint64_t* rows, std::size_t count,
                     const std::uint64_t* select, std::uint64_t* out) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t w = 0; w < kWords && w * 64 < count; ++w) {
    std::uint64_t bits = select[w];
    if (count < (w + 1) * 64) {
      const std::size_t keep = count - w * 64;
      bits &= (std::uint64_t{1} << keep) - 1;
    }
    while (bits != 0) {
      const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      acc = _mm256_or_si256(acc, load_row(rows + i * kWords));
    }
  }
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), acc);
}

void avx2_equal_rows(const std::uint64_t* rows, std::size_t count,
                     const std::uint64_t* target, std::uint64_t* out) {
  const __m256i t = load_row(target);
  std::uint64_t acc[kWords] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < count; ++i) {
    const __m256i eq = _mm256_cmpeq_epi64(load_row(rows + i * kWords), t);
    const bool same = static_cast<unsigned>(_mm256_movemask_epi8(eq)) == 0xffffffffU;
    acc[i >> 6] |= static_cast<std::uint64_t>(same) << (i & 63);
  }
  for (std::size_t w = 0; w < kWords; ++w) out[w] = acc[w];
}

}  // namespace domlab::kernels::impl
