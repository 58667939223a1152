#include <algorithm>
#include <array>
#include <mutex>

#include "domlab/enumeration.hpp"
#include "domlab/errors.hpp"

namespace domlab {

namespace {

std::vector<std::uint64_t> extend(int n, const std::vector<std::uint64_t>& parents) {
  std::vector<std::uint64_t> out;
  const int m = n - 1;
  for (std::uint64_t code : parents) {
    const Graph parent = unpack_upper_triangle(m, code);
    int max_degree = 0;
    std::uint32_t top = 0;  // vertices of maximum degree
    for (int v = 0; v < m; ++v) {
      const int d = parent.degree(v);
      if (d > max_degree) {
        max_degree = d;
        top = 0;
      }
      if (d == max_degree) top |= 1U << v;
    }
    for (std::uint32_t s = 0; s < (1U << m); ++s) {
      const int d = std::popcount(s);
      // The new vertex must have maximum degree in the child.
      if (d < max_degree || (d == max_degree && (s & top) != 0)) continue;
      Graph child(n);
      for (const auto& [u, v] : parent.edges()) child.add_edge(u, v);
      for (int u = 0; u < m; ++u) {
        if ((s >> u) & 1U) child.add_edge(u, m);
      }
      out.push_back(pack_upper_triangle(canonical_form(child)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class CodeStream : public GraphStream {
 public:
  CodeStream(int lo, int hi) : n_(lo), hi_(hi) {}

  std::optional<Graph> next() override {
    while (n_ <= hi_) {
      const auto& codes = unlabeled_codes(n_);
      if (index_ < codes.size()) return unpack_upper_triangle(n_, codes[index_++]);
      ++n_;
      index_ = 0;
    }
    return std::nullopt;
  }

 private:
  int n_;
  int hi_;
  std::size_t index_ = 0;
};

}  // namespace

const std::vector<std::uint64_t>& unlabeled_codes(int n) {
  if (n < 0 || n > kBuiltinMaxOrder) {
    throw PreconditionError("built-in enumeration supports 0 <= n <= " + std::to_string(kBuiltinMaxOrder) +
                            "; use a graph6 stream beyond that");
  }
  static std::mutex mutex;
  static std::array<std::optional<std::vector<std::uint64_t>>, kBuiltinMaxOrder + 1> cache;
  std::lock_guard lock(mutex);
  for (int m = 0; m <= n; ++m) {
    if (cache[m]) continue;
    cache[m] = m <= 1 ? std::vector<std::uint64_t>{0} : extend(m, *cache[m - 1]);
  }
  return *cache[n];
}

std::unique_ptr<GraphStream> enumerate_unlabeled(int n) {
  unlabeled_codes(n);
  return std::make_unique<CodeStream>(n, n);
}

std::unique_ptr<GraphStream> enumerate_up_to(int max_n) {
  unlabeled_codes(max_n);
  return std::make_unique<CodeStream>(1, max_n);
}

}  // namespace domlab
