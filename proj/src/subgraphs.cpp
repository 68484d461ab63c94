#include "singturan/subgraphs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace singturan {

namespace {

// Multi-word vertex set used by the clique search; sized to the host graph.
using Words = std::vector<std::uint64_t>;

bool clique_step(const Graph& g, int k, std::vector<int>& chosen, const Words& candidates,
                 const TupleVisitor& visit) {
  if (static_cast<int>(chosen.size()) == k) return visit(chosen);
  const int words = g.words_per_row();
  for (int w = 0; w < words; ++w) {
    for (std::uint64_t bits = candidates[w]; bits != 0; bits &= bits - 1) {
      const int v = w * 64 + std::countr_zero(bits);
      // Keep only later neighbours of v so each clique is produced once, in order.
      Words next(words, 0);
      auto row = g.row(v);
      int remaining = 0;
      for (int x = 0; x < words; ++x) {
        next[x] = candidates[x] & row[x];
        if (x < w) next[x] = 0;
        if (x == w) next[x] &= ~((std::uint64_t{2} << (v & 63)) - 1);
        remaining += std::popcount(next[x]);
      }
      if (remaining + 1 + static_cast<int>(chosen.size()) < k) continue;
      chosen.push_back(v);
      const bool go_on = clique_step(g, k, chosen, next, visit);
      chosen.pop_back();
      if (!go_on) return false;
    }
  }
  return true;
}

struct EmbedState {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> anchor;  // an earlier pattern neighbour of i, or -1
  std::vector<int> image;
  std::vector<char> used;
};

bool try_vertex(EmbedState& st, int i, int v, const TupleVisitor& visit);

bool embed_step(EmbedState& st, const TupleVisitor& visit) {
  const int i = static_cast<int>(st.image.size());
  if (i == st.pattern.order()) return visit(st.image);
  if (st.anchor[i] >= 0) {
    auto row = st.host.row(st.image[st.anchor[i]]);
    for (int w = 0; w < st.host.words_per_row(); ++w)
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1)
        if (!try_vertex(st, i, w * 64 + std::countr_zero(bits), visit)) return false;
    return true;
  }
  for (int v = 0; v < st.host.order(); ++v)
    if (!try_vertex(st, i, v, visit)) return false;
  return true;
}

bool try_vertex(EmbedState& st, int i, int v, const TupleVisitor& visit) {
  if (st.used[v]) return true;
  for (int j = 0; j < i; ++j)
    if (st.pattern.adjacent(i, j) && !st.host.adjacent(v, st.image[j])) return true;
  st.used[v] = 1;
  st.image.push_back(v);
  const bool go_on = embed_step(st, visit);
  st.image.pop_back();
  st.used[v] = 0;
  return go_on;
}

}  // namespace

bool for_each_clique(const Graph& g, int k, const TupleVisitor& visit) {
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  if (k > g.order()) return true;
  Words all(g.words_per_row(), 0);
  for (int v = 0; v < g.order(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<int> chosen;
  chosen.reserve(k);
  return clique_step(g, k, chosen, all, visit);
}

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  for_each_clique(g, k, [&](std::span<const int> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

bool has_clique(const Graph& g, int k) {
  return !for_each_clique(g, k, [](std::span<const int>) { return false; });
}

bool for_each_embedding(const Graph& host, const Graph& pattern, const TupleVisitor& visit) {
  EmbedState st{host, pattern, std::vector<int>(pattern.order(), -1), {}, std::vector<char>(host.order(), 0)};
  for (int i = 0; i < pattern.order(); ++i)
    for (int j = 0; j < i; ++j)
      if (pattern.adjacent(i, j)) {
        st.anchor[i] = j;
        break;
      }
  st.image.reserve(pattern.order());
  return embed_step(st, visit);
}

std::vector<std::vector<int>> automorphisms(const Graph& pattern) {
  std::vector<std::vector<int>> out;
  for_each_embedding(pattern, pattern, [&](std::span<const int> f) {
    out.emplace_back(f.begin(), f.end());
    return true;
  });
  return out;
}

bool for_each_copy(const Graph& host, const Graph& pattern, const std::vector<std::vector<int>>& auts,
                   const TupleVisitor& visit) {
  const int h = pattern.order();
  std::vector<int> moved(h);
  return for_each_embedding(host, pattern, [&](std::span<const int> f) {
    // f∘σ ranges over the embeddings with the same image; keep the least.
    for (const auto& sigma : auts) {
      for (int i = 0; i < h; ++i) moved[i] = f[sigma[i]];
      if (std::lexicographical_compare(moved.begin(), moved.end(), f.begin(), f.end())) return true;
    }
    return visit(f);
  });
}

}  // namespace singturan
