#include "singturan/canonical.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "singturan/graph6.hpp"

namespace singturan {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<Mask>;

constexpr Mask bit(int v) { return Mask{1} << v; }

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
  std::vector<int> parent;
};

class Search {
 public:
  explicit Search(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.row64(v);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if ((adj_[u] & ~bit(v)) == (adj_[v] & ~bit(u))) twins_.emplace_back(u, v);
  }

  CanonicalForm run() {
    Cells cells;
    if (n_ > 0) cells.push_back(n_ == 64 ? ~Mask{0} : bit(n_) - 1);
    descend(std::move(cells));

    CanonicalForm out;
    out.position.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.position[best_perm_[i]] = i;
    Graph canon(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (best_key_[i] & bit(j)) canon.add_edge(i, j);
    out.code = to_graph6(canon);
    out.generators = std::move(generators_);

    UnionFind uf(n_);
    for (const auto& gen : out.generators)
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    for (auto [u, v] : twins_) uf.unite(u, v);
    out.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);
    return out;
  }

 private:
  // Split every cell by the number of neighbours in each splitter cell until
  // the partition is equitable. Decisions depend only on cell order and counts.
  void refine(Cells& cells) const {
  restart:
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const Mask splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const Mask cell = cells[c];
        if (std::popcount(cell) == 1) continue;
        std::array<Mask, 65> by_count{};
        int distinct = 0;
        for (Mask r = cell; r != 0; r &= r - 1) {
          const int v = std::countr_zero(r);
          const int k = std::popcount(adj_[v] & splitter);
          if (by_count[k] == 0) ++distinct;
          by_count[k] |= bit(v);
        }
        if (distinct == 1) continue;
        Cells pieces;
        for (int k = 0; k <= 64; ++k)
          if (by_count[k] != 0) pieces.push_back(by_count[k]);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        goto restart;
      }
    }
  }

  void leaf(const Cells& cells) {
    std::array<int, 64> perm{};
    std::array<int, 64> pos{};
    for (int i = 0; i < n_; ++i) {
      perm[i] = std::countr_zero(cells[i]);
      pos[perm[i]] = i;
    }
    std::array<Mask, 64> key{};
    for (int i = 0; i < n_; ++i)
      for (Mask r = adj_[perm[i]]; r != 0; r &= r - 1) key[i] |= bit(pos[std::countr_zero(r)]);

    if (!have_first_) {
      have_first_ = true;
      first_key_ = key;
      first_perm_.assign(perm.begin(), perm.begin() + n_);
    } else if (key == first_key_ && first_key_ != best_key_) {
      std::vector<int> gen(n_);
      for (int i = 0; i < n_; ++i) gen[first_perm_[i]] = perm[i];
      generators_.push_back(std::move(gen));
    }

    int cmp = 0;
    if (!have_best_) {
      cmp = 1;
    } else {
      for (int i = 0; i < n_ && cmp == 0; ++i)
        if (key[i] != best_key_[i]) cmp = key[i] > best_key_[i] ? 1 : -1;
    }
    if (cmp > 0) {
      have_best_ = true;
      best_key_ = key;
      best_perm_.assign(perm.begin(), perm.begin() + n_);
    } else if (cmp == 0) {
      std::vector<int> gen(n_);
      for (int i = 0; i < n_; ++i) gen[best_perm_[i]] = perm[i];
      generators_.push_back(std::move(gen));
    }
  }

  bool same_orbit_as_explored(int v, Mask explored) const {
    UnionFind uf(n_);
    for (const auto& gen : generators_) {
      bool fixes_path = true;
      for (int p : path_)
        if (gen[p] != p) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      for (int w = 0; w < n_; ++w) uf.unite(w, gen[w]);
    }
    for (auto [a, b] : twins_) {
      if (on_path(a) || on_path(b)) continue;
      uf.unite(a, b);
    }
    const int root = uf.find(v);
    for (Mask r = explored; r != 0; r &= r - 1)
      if (uf.find(std::countr_zero(r)) == root) return true;
    return false;
  }

  bool on_path(int v) const {
    for (int p : path_)
      if (p == v) return true;
    return false;
  }

  void descend(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    int target_size = 65;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const int size = std::popcount(cells[c]);
      if (size > 1 && size < target_size) {
        target = c;
        target_size = size;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const Mask cell = cells[target];
    Mask explored = 0;
    for (Mask r = cell; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (explored != 0 && same_orbit_as_explored(v, explored)) continue;
      Cells child = cells;
      child[target] = bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~bit(v));
      path_.push_back(v);
      descend(std::move(child));
      path_.pop_back();
      explored |= bit(v);
    }
  }

  int n_;
  std::array<Mask, 64> adj_{};
  std::vector<std::pair<int, int>> twins_;
  std::vector<int> path_;
  bool have_first_ = false;
  std::array<Mask, 64> first_key_{};
  std::vector<int> first_perm_;
  bool have_best_ = false;
  std::array<Mask, 64> best_key_{};
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (!g.fits64()) throw std::invalid_argument("canonical_form supports at most 64 vertices");
  return Search(g).run();
}

std::string canonical_code(const Graph& g) { return canonical_form(g).code; }

}  // namespace singturan
