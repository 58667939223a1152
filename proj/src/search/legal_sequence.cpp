#include <algorithm>

#include "domlab/detail/search.hpp"
#include "domlab/kernels.hpp"

namespace domlab::detail {

StateMemo::StateMemo(std::size_t cap) : cap_(cap) {
  const std::size_t slots = 1024;
  keys_.resize(slots);
  values_.assign(slots, kMissing);
  mask_ = slots - 1;
}

std::uint16_t StateMemo::find(const VertexSet& key) const {
  for (std::size_t i = key.hash() & mask_;; i = (i + 1) & mask_) {
    if (values_[i] == kMissing) return kMissing;
    if (keys_[i] == key) return values_[i];
  }
}

void StateMemo::insert(const VertexSet& key, std::uint16_t value) {
  if (saturated()) return;
  if ((size_ + 1) * 2 > keys_.size()) grow();
  for (std::size_t i = key.hash() & mask_;; i = (i + 1) & mask_) {
    if (values_[i] == kMissing) {
      keys_[i] = key;
      values_[i] = value;
      ++size_;
      return;
    }
    if (keys_[i] == key) {
      values_[i] = value;
      return;
    }
  }
}

void StateMemo::grow() {
  std::vector<VertexSet> old_keys = std::move(keys_);
  std::vector<std::uint16_t> old_values = std::move(values_);
  const std::size_t slots = old_keys.size() * 2;
  keys_.assign(slots, VertexSet{});
  values_.assign(slots, kMissing);
  mask_ = slots - 1;
  for (std::size_t j = 0; j < old_keys.size(); ++j) {
    if (old_values[j] == kMissing) continue;
    std::size_t i = old_keys[j].hash() & mask_;
    while (values_[i] != kMissing) i = (i + 1) & mask_;
    keys_[i] = old_keys[j];
    values_[i] = old_values[j];
  }
}

namespace {

class SequenceSearch {
 public:
  SequenceSearch(std::span<const VertexSet> rows, std::size_t memo_cap)
      : rows_(rows), memo_(memo_cap) {
    for (const auto& r : rows) universe_ |= r;
  }

  SequenceResult run() {
    SequenceResult out;
    out.length = best_extension(VertexSet{});
    VertexSet covered;
    for (int remaining = out.length; remaining > 0; --remaining) {
      const VertexSet live = kernels::live_rows(rows_, covered);
      for (int r : live) {
        const VertexSet child = covered | rows_[r];
        if (1 + best_extension(child) == remaining) {
          out.order.push_back(r);
          out.footprints.push_back((rows_[r] - covered).first());
          covered = child;
          break;
        }
      }
    }
    out.nodes = nodes_;
    out.memo_entries = memo_.size();
    out.memo_saturated = memo_.saturated();
    return out;
  }

 private:
  int best_extension(const VertexSet& covered) {
    const std::uint16_t cached = memo_.find(covered);
    if (cached != StateMemo::kMissing) return cached;
    ++nodes_;
    const VertexSet live = kernels::live_rows(rows_, covered);
    const int live_count = live.count();
    const int uncovered = (universe_ - covered).count();
    int best = 0;
    const int ceiling = std::min(uncovered, live_count);
    for (int r : live) {
      if (best >= ceiling) break;
      const VertexSet child = covered | rows_[r];
      // Every further move covers a new point and uses another live row.
      const int child_bound = std::min((universe_ - child).count(), live_count - 1);
      if (1 + child_bound <= best) continue;
      best = std::max(best, 1 + best_extension(child));
    }
    memo_.insert(covered, static_cast<std::uint16_t>(best));
    return best;
  }

  std::span<const VertexSet> rows_;
  VertexSet universe_;
  StateMemo memo_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SequenceResult longest_legal_sequence(std::span<const VertexSet> rows, std::size_t memo_cap) {
  return SequenceSearch(rows, memo_cap).run();
}

}  // namespace domlab::detail
