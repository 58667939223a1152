#include <atomic>
#include <cstdlib>
#include <string_view>

#include "domlab/kernels.hpp"
#include "kernel_impl.hpp"

namespace domlab::kernels {

namespace {

constexpr Table kScalarTable{Backend::kScalar, "scalar", impl::scalar_masked_popcounts,
                             impl::scalar_live_rows, impl::scalar_union_rows,
                             impl::scalar_equal_rows};

#if defined(DOMLAB_HAVE_AVX2)
constexpr Table kAvx2Table{Backend::kAvx2, "avx2", impl::avx2_masked_popcounts,
                           impl::avx2_live_rows, impl::avx2_union_rows, impl::avx2_equal_rows};
#endif

bool cpu_has_avx2() {
#if defined(DOMLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const Table* initial_table() {
  const char* env = std::getenv("DOMLAB_KERNELS");
  if (env != nullptr) {
    const std::string_view want(env);
    if (want == "scalar") return &kScalarTable;
    if (want == "avx2" && table(Backend::kAvx2) != nullptr) return table(Backend::kAvx2);
  }
  if (const Table* t = table(Backend::kAvx2)) return t;
  return &kScalarTable;
}

std::atomic<const Table*>& slot() {
  static std::atomic<const Table*> current{initial_table()};
  return current;
}

}  // namespace

const Table* table(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return &kScalarTable;
    case Backend::kAvx2:
#if defined(DOMLAB_HAVE_AVX2)
      if (cpu_has_avx2()) return &kAvx2Table;
#endif
      return nullptr;
  }
  return nullptr;
}

const Table& active() { return *slot().load(std::memory_order_relaxed); }

bool select(Backend b) {
  const Table* t = table(b);
  if (t == nullptr) return false;
  slot().store(t, std::memory_order_relaxed);
  return true;
}

std::string_view backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

}  // namespace domlab::kernels
