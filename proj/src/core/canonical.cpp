#include <algorithm>
#include <numeric>

#include "domlab/errors.hpp"
#include "domlab/graph.hpp"
#include "domlab/kernels.hpp"

namespace domlab {

namespace {

using Partition = std::vector<VertexSet>;
using Code = std::vector<VertexSet>;

bool code_less(const Code& a, const Code& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.order()), counts_(static_cast<std::size_t>(n_)), parent_(static_cast<std::size_t>(n_)) {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    Partition root{g_.vertices()};
    refine(root, {g_.vertices()});
    search(root);
    return best_order_;
  }

 private:
  // Splits cells until every cell has a uniform neighbor count into every
  // splitter. Pieces are ordered by ascending count, which only depends on
  // isomorphism-invariant data.
  void refine(Partition& cells, std::vector<VertexSet> splitters) {
    std::size_t head = 0;
    while (head < splitters.size() && static_cast<int>(cells.size()) < n_) {
      const VertexSet w = splitters[head++];
      kernels::masked_popcounts(g_.rows(), w, counts_);
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const VertexSet cell = cells[ci];
        const int first = cell.first();
        if (cell.next(first) == -1) continue;
        bool uniform = true;
        for (int v : cell) {
          if (counts_[v] != counts_[first]) {
            uniform = false;
            break;
          }
        }
        if (uniform) continue;
        std::vector<std::uint16_t> keys;
        for (int v : cell) keys.push_back(counts_[v]);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        Partition pieces(keys.size());
        for (int v : cell) {
          const auto it = std::lower_bound(keys.begin(), keys.end(), counts_[v]);
          pieces[static_cast<std::size_t>(it - keys.begin())].set(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());
        for (const auto& p : pieces) splitters.push_back(p);
        ci += pieces.size() - 1;
      }
    }
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current prefix pointwise.
  void compute_orbits() {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int p : prefix_) {
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int i = 0; i < n_; ++i) {
        const int a = find(i);
        const int b = find(gamma[i]);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  void leaf(const Partition& cells) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) order.push_back(c.first());
    std::vector<int> position(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) position[order[i]] = i;
    Code code(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      for (int u : g_.neighbors(order[i])) code[i].set(position[u]);
    }
    if (best_order_.empty() || code_less(code, best_code_)) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_) {
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) gamma[best_order_[i]] = order[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  void search(const Partition& cells) {
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (cells[target].count() == 1) ++target;
    std::vector<int> tried;
    for (int v : cells[target]) {
      compute_orbits();
      const int orbit = find(v);
      bool redundant = false;
      for (int t : tried) {
        if (find(t) == orbit) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);

      Partition child = cells;
      VertexSet rest = child[target];
      rest.reset(v);
      child[target] = VertexSet::single(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
      refine(child, {VertexSet::single(v)});
      prefix_.push_back(v);
      search(child);
      prefix_.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint16_t> counts_;
  std::vector<int> parent_;
  std::vector<int> prefix_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<int> best_order_;
  Code best_code_;
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) { return CanonicalSearch(g).run(); }

Graph canonical_form(const Graph& g) { return g.relabeled(canonical_order(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::uint64_t pack_upper_triangle(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw PreconditionError("pack_upper_triangle supports n <= 11");
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  }
  return code;
}

Graph unpack_upper_triangle(int n, std::uint64_t code) {
  if (n > 11) throw PreconditionError("unpack_upper_triangle supports n <= 11");
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace domlab
