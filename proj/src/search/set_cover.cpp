#include <algorithm>

#include "domlab/detail/search.hpp"
#include "domlab/errors.hpp"
#include "domlab/kernels.hpp"

namespace domlab::detail {

namespace {

class CoverSearch {
 public:
  CoverSearch(std::span<const VertexSet> rows, const VertexSet& universe)
      : rows_(rows), universe_(universe), gains_(rows.size()) {
    for (int p : universe) {
      VertexSet holders;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].test(p)) holders.set(static_cast<int>(r));
      }
      containing_[p] = holders;
    }
  }

  CoverResult run() {
    greedy();
    std::vector<int> chosen;
    dfs(VertexSet{}, chosen);
    CoverResult out;
    out.size = static_cast<int>(best_.size());
    out.rows = best_;
    std::sort(out.rows.begin(), out.rows.end());
    out.nodes = nodes_;
    return out;
  }

 private:
  void greedy() {
    VertexSet covered;
    best_.clear();
    while (!universe_.subset_of(covered)) {
      kernels::masked_popcounts(rows_, universe_ - covered, gains_);
      const auto it = std::max_element(gains_.begin(), gains_.end());
      if (it == gains_.end() || *it == 0) throw PreconditionError("rows do not cover the universe");
      const int r = static_cast<int>(it - gains_.begin());
      best_.push_back(r);
      covered |= rows_[r];
    }
  }

  void dfs(const VertexSet& covered, std::vector<int>& chosen) {
    ++nodes_;
    const VertexSet remaining = universe_ - covered;
    if (remaining.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;
    kernels::masked_popcounts(rows_, remaining, gains_);
    const int max_gain = *std::max_element(gains_.begin(), gains_.end());
    const int need = (remaining.count() + max_gain - 1) / max_gain;
    if (chosen.size() + static_cast<std::size_t>(need) >= best_.size()) return;

    int pivot = -1;
    int fewest = 1 << 30;
    for (int p : remaining) {
      const int c = containing_[p].count();
      if (c < fewest) {
        fewest = c;
        pivot = p;
      }
    }
    std::vector<VertexSet> seen;
    for (int r : containing_[pivot]) {
      const VertexSet gain = rows_[r] & remaining;
      if (std::find(seen.begin(), seen.end(), gain) != seen.end()) continue;
      seen.push_back(gain);
      chosen.push_back(r);
      dfs(covered | rows_[r], chosen);
      chosen.pop_back();
    }
  }

  std::span<const VertexSet> rows_;
  VertexSet universe_;
  std::vector<std::uint16_t> gains_;
  VertexSet containing_[VertexSet::kCapacity];
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CoverResult min_set_cover(std::span<const VertexSet> rows, const VertexSet& universe) {
  if (universe.empty()) return {};
  return CoverSearch(rows, universe).run();
}

}  // namespace domlab::detail
