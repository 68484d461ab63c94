#include "singturan/worm.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include <json.hpp>
#include <omp.h>

#include "singturan/subgraphs.hpp"

namespace singturan {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_)
    if (c < 0) throw std::invalid_argument("colour ids must be non-negative");
}

int Coloring::distinct_colors() const {
  auto sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::string Coloring::to_json() const { return nlohmann::json(colors_).dump(); }

Coloring Coloring::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("colouring JSON must be an array");
  std::vector<int> colors;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("colour ids must be integers");
    colors.push_back(x.get<int>());
  }
  return Coloring(std::move(colors));
}

Coloring degree_coloring(const Graph& g) {
  const auto deg = g.degrees();
  auto values = deg;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> colors(deg.size());
  for (std::size_t v = 0; v < deg.size(); ++v)
    colors[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), deg[v]) - values.begin());
  return Coloring(std::move(colors));
}

std::string to_string(WormKind kind) { return kind == WormKind::Monochromatic ? "MONOCHROMATIC" : "RAINBOW"; }

std::vector<std::vector<int>> copy_vertex_sets(const Graph& g, const PatternGraph& f) {
  if (f.is_clique()) return enumerate_cliques(g, f.order());
  std::vector<std::vector<int>> sets;
  for_each_copy(g, f.graph(), f.automorphisms(), [&](std::span<const int> emb) {
    std::vector<int> s(emb.begin(), emb.end());
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
    return true;
  });
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

namespace {

void require_worm_pattern(const PatternGraph& f) {
  if (f.order() < 3)
    throw std::invalid_argument("WORM colourings need a pattern with at least 3 vertices");
}

int colours_on(const std::vector<int>& set, const std::vector<int>& col) {
  int seen[64];
  int count = 0;
  for (int v : set) {
    const int c = col[v];
    bool fresh = true;
    for (int i = 0; i < count; ++i)
      if (seen[i] == c) {
        fresh = false;
        break;
      }
    if (fresh) seen[count++] = c;
  }
  return count;
}

class WormSearch {
 public:
  WormSearch(const Graph& g, const PatternGraph& f, std::optional<int> max_colors)
      : n_(g.order()), pattern_size_(f.order()), closing_(g.order()) {
    require_worm_pattern(f);
    max_colors_ = max_colors.value_or(std::max(n_, 1));
    if (max_colors_ < 1) throw std::invalid_argument("colour budget must be positive");
    for (auto& s : copy_vertex_sets(g, f)) closing_[s.back()].push_back(std::move(s));
  }

  int order() const { return n_; }

  // Copies completed by colouring vertex i must be neither mono- nor rainbow.
  bool consistent(const std::vector<int>& col, int i) const {
    for (const auto& s : closing_[i]) {
      const int k = colours_on(s, col);
      if (k == 1 || k == pattern_size_) return false;
    }
    return true;
  }

  bool extend(std::vector<int>& col, int i, int used) const {
    if (i == n_) return true;
    const int limit = std::min(used + 1, max_colors_);
    for (int c = 0; c < limit; ++c) {
      col[i] = c;
      if (consistent(col, i) && extend(col, i + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  // Consistent restricted-growth prefixes of length `depth`, in lexicographic order.
  void prefixes(std::vector<int>& col, int i, int used, int depth, std::vector<std::vector<int>>& out) const {
    if (i == depth) {
      out.emplace_back(col.begin(), col.begin() + depth);
      return;
    }
    const int limit = std::min(used + 1, max_colors_);
    for (int c = 0; c < limit; ++c) {
      col[i] = c;
      if (consistent(col, i)) prefixes(col, i + 1, std::max(used, c + 1), depth, out);
    }
  }

 private:
  int n_;
  int pattern_size_;
  int max_colors_ = 0;
  std::vector<std::vector<std::vector<int>>> closing_;
};

}  // namespace

std::optional<WormViolation> check_worm(const Graph& g, const PatternGraph& f, const Coloring& c) {
  require_worm_pattern(f);
  if (c.size() != g.order()) throw std::invalid_argument("colouring must assign every vertex a colour");
  for (const auto& s : copy_vertex_sets(g, f)) {
    const int k = colours_on(s, c.colors());
    if (k == 1) return WormViolation{WormKind::Monochromatic, s};
    if (k == f.order()) return WormViolation{WormKind::Rainbow, s};
  }
  return std::nullopt;
}

std::optional<Coloring> find_worm_coloring_serial(const Graph& g, const PatternGraph& f,
                                                  std::optional<int> max_colors) {
  WormSearch search(g, f, max_colors);
  std::vector<int> col(g.order(), 0);
  if (!search.extend(col, 0, 0)) return std::nullopt;
  return Coloring(std::move(col));
}

std::optional<Coloring> find_worm_coloring(const Graph& g, const PatternGraph& f, std::optional<int> max_colors,
                                           int workers) {
  if (workers <= 1 || g.order() < 6) return find_worm_coloring_serial(g, f, max_colors);
  WormSearch search(g, f, max_colors);
  const int n = g.order();
  const int depth = std::min(n, 5);
  std::vector<int> scratch(n, 0);
  std::vector<std::vector<int>> tops;
  search.prefixes(scratch, 0, 0, depth, tops);

  const int count = static_cast<int>(tops.size());
  std::vector<std::vector<int>> found(count);
  std::atomic<int> best{std::numeric_limits<int>::max()};
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int t = 0; t < count; ++t) {
    if (t > best.load()) continue;
    std::vector<int> col(n, 0);
    std::copy(tops[t].begin(), tops[t].end(), col.begin());
    const int used = *std::max_element(tops[t].begin(), tops[t].end()) + 1;
    if (search.extend(col, depth, used)) {
      found[t] = std::move(col);
      int seen = best.load();
      while (t < seen && !best.compare_exchange_weak(seen, t)) {
      }
    }
  }
  const int winner = best.load();
  if (winner == std::numeric_limits<int>::max()) return std::nullopt;
  return Coloring(std::move(found[winner]));
}

}  // namespace singturan
