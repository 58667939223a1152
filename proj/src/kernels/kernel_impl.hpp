#pragma once

// Backend entry points. Kept free of any domlab headers so the AVX2
// translation unit compiles no shared inline code with -mavx2.

#include <cstddef>
#include <cstdint>

namespace domlab::kernels::impl {

void scalar_masked_popcounts(const std::uint64_t* rows, std::size_t count,
                             const std::uint64_t* mask, std::uint16_t* out);
void scalar_live_rows(const std::uint64_t* rows, std::size_t count,
                      const std::uint64_t* covered, std::uint64_t* out);
void scalar_union_rows(const std::uint64_t* rows, std::size_t count,
                       const std::uint64_t* select, std::uint64_t* out);
void scalar_equal_rows(const std::uint64_t* rows, std::size_t count,
                       const std::uint64_t* target, std::uint64_t* out);

#if defined(DOMLAB_HAVE_AVX2)
void avx2_masked_popcounts(const std::uint64_t* rows, std::size_t count,
                           const std::uint64_t* mask, std::uint16_t* out);
void avx2_live_rows(const std::uint64_t* rows, std::size_t count,
                    const std::uint64_t* covered, std::uint64_t* out);
void avx2_union_rows(const std::uint64_t* rows, std::size_t count,
                     const std::uint64_t* select, std::uint64_t* out);
void avx2_equal_rows(const std::uint64_t* rows, std::size_t count,
                     const std::uint64_t* target, std::uint64_t* out);
#endif

}  // namespace domlab::kernels::impl
