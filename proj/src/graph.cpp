#include "singturan/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace singturan {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) return;
  word(u, v) |= std::uint64_t{1} << (v & 63);
  word(v, u) |= std::uint64_t{1} << (u & 63);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!adjacent(u, v)) return;
  word(u, v) &= ~(std::uint64_t{1} << (v & 63));
  word(v, u) &= ~(std::uint64_t{1} << (u & 63));
  --m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w)
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) out.push_back(w * 64 + std::countr_zero(bits));
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) g.add_edge(u, v);
  return g;
}

Graph Graph::with_extra_vertices(int count) const {
  Graph g(n_ + count);
  for (auto [u, v] : edges()) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g = a.with_extra_vertices(b.order());
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

std::vector<int> degree_sequence(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  const int d0 = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != d0) return std::nullopt;
  return d0;
}

namespace {

// Colour vertices in a fixed order with at most k colours; neighbours already
// coloured are the only constraint.
bool colourable(const Graph& g, const std::vector<int>& order, std::vector<int>& colour, std::size_t idx,
                int k, int used) {
  if (idx == order.size()) return true;
  const int v = order[idx];
  // New colours are symmetric, so only try one unused colour.
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int w : g.neighbors(v))
      if (colour[w] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colour[v] = c;
    if (colourable(g, order, colour, idx + 1, k, std::max(used, c + 1))) return true;
    colour[v] = -1;
  }
  return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  std::vector<int> order(g.order());
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 2;; ++k) {
    std::vector<int> colour(g.order(), -1);
    if (colourable(g, order, colour, 0, k, 0)) return k;
  }
}

std::optional<int> odd_girth(const Graph& g) {
  // For every root, an edge joining two vertices at equal BFS depth closes an
  // odd closed walk of length 2d+1; the minimum over all roots is the odd girth.
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] + 1 >= *best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        } else if (dist[w] == dist[u]) {
          const int len = 2 * dist[u] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

}  // namespace singturan
