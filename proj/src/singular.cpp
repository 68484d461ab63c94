#include "singturan/singular.hpp"

#include <algorithm>
#include <stdexcept>

#include "singturan/subgraphs.hpp"

namespace singturan {

std::string to_string(SingularMode mode) {
  return mode == SingularMode::AllEqual ? "ALL_EQUAL" : "ALL_DISTINCT";
}

namespace {

void require_pattern(const PatternGraph& h) {
  if (h.order() < 2) throw std::invalid_argument("singular copies need a pattern with at least 2 vertices");
}

std::optional<SingularMode> classify(const std::vector<int>& degs) {
  auto sorted = degs;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == sorted.back()) return SingularMode::AllEqual;
  if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return SingularMode::AllDistinct;
  return std::nullopt;
}

// Host graph restricted to edges whose endpoints agree (or differ) in degree.
Graph degree_filtered(const Graph& g, const std::vector<int>& deg, bool equal) {
  Graph out(g.order());
  for (auto [u, v] : g.edges())
    if ((deg[u] == deg[v]) == equal) out.add_edge(u, v);
  return out;
}

std::optional<std::vector<int>> least_clique(const Graph& g, int k) {
  std::optional<std::vector<int>> found;
  for_each_clique(g, k, [&](std::span<const int> c) {
    found.emplace(c.begin(), c.end());
    return false;
  });
  return found;
}

SingularWitness make_witness(std::vector<int> vertices, SingularMode mode, const std::vector<int>& deg) {
  SingularWitness w;
  w.vertices = std::move(vertices);
  w.mode = mode;
  for (int v : w.vertices) w.degrees.push_back(deg[v]);
  return w;
}

}  // namespace

std::optional<SingularWitness> find_singular_copy(const Graph& g, const PatternGraph& h) {
  require_pattern(h);
  const auto deg = g.degrees();
  const int k = h.order();

  if (h.is_clique()) {
    // Within the equal-degree graph every clique is all-equal; within the
    // rainbow graph every clique has pairwise distinct degrees.
    auto eq = least_clique(degree_filtered(g, deg, true), k);
    auto rb = least_clique(degree_filtered(g, deg, false), k);
    if (eq && (!rb || *eq < *rb)) return make_witness(std::move(*eq), SingularMode::AllEqual, deg);
    if (rb) return make_witness(std::move(*rb), SingularMode::AllDistinct, deg);
    return std::nullopt;
  }

  std::optional<SingularWitness> best;
  std::vector<int> degs(k), set(k);
  for_each_copy(g, h.graph(), h.automorphisms(), [&](std::span<const int> f) {
    for (int i = 0; i < k; ++i) degs[i] = deg[f[i]];
    const auto mode = classify(degs);
    if (!mode) return true;
    set.assign(f.begin(), f.end());
    std::sort(set.begin(), set.end());
    if (!best || set < best->vertices) best = make_witness(set, *mode, deg);
    return true;
  });
  return best;
}

bool is_singular_free(const Graph& g, const PatternGraph& h) {
  require_pattern(h);
  if (h.is_clique()) return !find_singular_copy(g, h).has_value();
  const auto deg = g.degrees();
  std::vector<int> degs(h.order());
  return for_each_copy(g, h.graph(), h.automorphisms(), [&](std::span<const int> f) {
    for (std::size_t i = 0; i < f.size(); ++i) degs[i] = deg[f[i]];
    return !classify(degs).has_value();
  });
}

bool contains_copy(const Graph& g, const PatternGraph& h) {
  if (h.is_clique()) return has_clique(g, h.order());
  return !for_each_embedding(g, h.graph(), [](std::span<const int>) { return false; });
}

}  // namespace singturan
