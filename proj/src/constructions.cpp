#include "singturan/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "singturan/singular.hpp"

namespace singturan {

namespace {

// Complete multipartite graph with parts laid out in the given order.
Graph blocks_graph(const std::vector<int>& sizes, std::vector<int>* block_of = nullptr) {
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> block(n);
  int at = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p)
    for (int i = 0; i < sizes[p]; ++i) block[at++] = static_cast<int>(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (block[u] != block[v]) g.add_edge(u, v);
  if (block_of) *block_of = std::move(block);
  return g;
}

void add_clique(Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
}

std::string params(int n, int r) { return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")"; }

}  // namespace

Graph caro_tuza_k3(int n) {
  if (n < 4) throw std::invalid_argument("caro_tuza_k3 needs n >= 4");
  const int k = n / 4;
  switch (n % 4) {
    case 0: {
      std::vector<int> sizes;
      for (int s : {k - 1, k - 1, k + 1, k + 1})
        if (s > 0) sizes.push_back(s);
      return complete_multipartite(PartSizes(sizes));
    }
    case 1: {
      Graph g = complete_multipartite(PartSizes({k, k, k, k})).with_extra_vertices(1);
      for (int v = 0; v < 2 * k; ++v) g.add_edge(n - 1, v);
      return g;
    }
    case 2:
      return turan_graph(n, 4);
    default: {
      Graph g = complete_multipartite(PartSizes({k, k, k + 1, k + 1})).with_extra_vertices(1);
      for (int v = 0; v < 2 * k; ++v) g.add_edge(n - 1, v);
      return g;
    }
  }
}

PartSizes property_r_partition(int n, int r) {
  if (r < 2) throw std::domain_error("property R needs r >= 2");
  if (n % r != 0) throw std::domain_error("property R needs r | n " + params(n, r));
  if (2 * n < r * r * (r + 1)) throw std::domain_error("property R needs n >= r^2(r+1)/2 " + params(n, r));
  return PartSizes(near_consecutive_distinct(n / r, r));
}

PartSizes property_r_parts(int n, int r) {
  const PartSizes blocks = property_r_partition(n, r);
  std::vector<int> sizes;
  for (int l : blocks.sizes())
    for (int i = 0; i < r; ++i) sizes.push_back(l);
  return PartSizes(std::move(sizes));
}

Graph property_r_graph(int n, int r) { return complete_multipartite(property_r_parts(n, r)); }

Graph clique_extension_graph(int n, int r) {
  if (r < 2) throw std::invalid_argument("clique extension needs r >= 2");
  const int m = n % r;
  if (m == 0) throw std::invalid_argument("clique extension needs n = rk + m with 1 <= m <= r-1");
  const int base_n = n - m;
  const auto blocks = property_r_partition(base_n, r).sizes();
  Graph g = property_r_graph(base_n, r).with_extra_vertices(m);
  // Parts are sorted, so the r-1 smallest block sizes occupy a prefix.
  int joined = 0;
  for (int i = 0; i + 1 < r; ++i) joined += r * blocks[i];
  std::vector<int> fresh;
  for (int i = 0; i < m; ++i) fresh.push_back(base_n + i);
  add_clique(g, fresh);
  for (int x : fresh)
    for (int v = 0; v < joined; ++v) g.add_edge(x, v);
  return g;
}

int matching_removal_block(int n, int r) {
  if (r < 3) throw std::domain_error("matching removal needs r >= 3");
  const int m = n % r;
  if (m < 1 || m > r - 2) throw std::domain_error("matching removal needs n = rk + m with 1 <= m <= r-2 " + params(n, r));
  const int big_n = n - m + r;
  const auto blocks = property_r_partition(big_n, r).sizes();
  const int cut = r - m;
  int best = -1;
  std::int64_t best_loss = 0;
  for (int s : blocks) {
    if (s % 2 == 0) continue;
    const std::int64_t loss =
        static_cast<std::int64_t>(cut) * (big_n - s) - choose2(cut) + static_cast<std::int64_t>(cut) * (s - 1) / 2;
    if (best < 0 || loss <= best_loss) {
      best = s;
      best_loss = loss;
    }
  }
  if (best < 0) throw std::domain_error("no odd block size " + params(n, r));
  return best;
}

Graph matching_removal_graph(int n, int r) {
  const int s = matching_removal_block(n, r);
  const int m = n % r;
  const int cut = r - m;
  const auto blocks = property_r_partition(n - m + r, r).sizes();

  // Shrunken parts first so the matching can be read off a vertex prefix.
  std::vector<int> sizes;
  for (int i = 0; i < cut; ++i) sizes.push_back(s - 1);
  for (int l : blocks)
    for (int i = 0; i < (l == s ? r - cut : r); ++i) sizes.push_back(l);
  sizes.erase(std::remove(sizes.begin(), sizes.end(), 0), sizes.end());
  Graph g = blocks_graph(sizes);

  // Shrunken parts hold at most half of the prefix each, so i and i + half
  // always lie in different parts.
  const int span = cut * (s - 1);
  const int half = span / 2;
  for (int i = 0; i < half; ++i) g.remove_edge(i, i + half);
  return g;
}

Graph hanson_toft_graph(int n, int r, int a_size) {
  if (r < 2) throw std::invalid_argument("hanson_toft_graph needs r >= 2");
  if (a_size < 1) throw std::invalid_argument("the set A must be nonempty");
  if (n < 2 * r + 1) throw std::invalid_argument("hanson_toft_graph needs n >= 2r+1");
  const PartSizes parts = balanced_parts(n - 1, r);
  const int x_size = parts.sizes()[0];
  const int y_size = parts.sizes()[1];
  if (x_size < 2 || y_size <= a_size)
    throw std::invalid_argument("classes too small: need |X| > 1 and |Y| > |A|");
  Graph g = complete_multipartite(parts).with_extra_vertices(1);
  const int apex = n - 1;
  for (int v = x_size + y_size; v < n - 1; ++v) g.add_edge(apex, v);
  const int u = 0;
  g.add_edge(apex, u);
  for (int i = 0; i < a_size; ++i) {
    const int a = x_size + i;
    g.add_edge(apex, a);
    g.remove_edge(u, a);
  }
  return g;
}

Graph p3_extremal(int n) {
  if (n < 5) throw std::invalid_argument("p3_extremal needs n >= 5");
  const int a = n % 2 == 1 ? n / 2 : n / 2 - 1;
  const int b = n - a;
  Graph g = Graph::complete_bipartite(a, b);
  for (int i = 0; i + 1 < a; i += 2) g.add_edge(i, i + 1);
  for (int i = 0; i + 1 < b; i += 2) g.add_edge(a + i, a + i + 1);
  return g;
}

namespace {

Graph circulant(int size, int d) {
  Graph g(size);
  for (int v = 0; v < size; ++v) {
    for (int j = 1; j <= d / 2; ++j) g.add_edge(v, (v + j) % size);
    if (d % 2 == 1) g.add_edge(v, (v + size / 2) % size);
  }
  return g;
}

Graph part_filler(int size, const IntraStrategy& intra) {
  using Kind = IntraStrategy::Kind;
  Graph g(size);
  switch (intra.kind) {
    case Kind::None:
      break;
    case Kind::DisjointCliques: {
      const int k = intra.param;
      if (k < 1 || size % k != 0)
        throw std::domain_error("part of size " + std::to_string(size) + " is not divisible by clique size " +
                                std::to_string(k));
      for (int start = 0; start < size; start += k) {
        std::vector<int> vs(k);
        std::iota(vs.begin(), vs.end(), start);
        add_clique(g, vs);
      }
      break;
    }
    case Kind::Regular: {
      const int d = intra.param;
      if (d < 0 || d >= size || (d % 2 == 1 && size % 2 == 1))
        throw std::domain_error("no " + std::to_string(d) + "-regular graph on " + std::to_string(size) + " vertices");
      g = circulant(size, d);
      if (regular_degree(g) != d) throw std::logic_error("circulant is not regular");
      break;
    }
    case Kind::MaximalMatching:
      for (int i = 0; i + 1 < size; i += 2) g.add_edge(i, i + 1);
      break;
  }
  return g;
}

}  // namespace

ColoredGraph worm_turan_graph(int n, const PatternGraph& f, IntraStrategy intra) {
  const int r = f.order() - 1;
  if (r < 2) throw std::invalid_argument("worm_turan_graph needs a pattern with at least 3 vertices");
  if (n < r) throw std::domain_error("worm_turan_graph needs n >= |V(F)| - 1");
  const PartSizes parts = balanced_parts(n, r);
  Graph g = complete_multipartite(parts);
  std::vector<int> colors(n);
  int at = 0;
  for (int p = 0; p < parts.parts(); ++p) {
    const int size = parts.sizes()[p];
    const Graph fill = part_filler(size, intra);
    if (contains_copy(fill, f)) throw std::domain_error("part filler contains a copy of " + f.name());
    for (auto [u, v] : fill.edges()) g.add_edge(at + u, at + v);
    for (int i = 0; i < size; ++i) colors[at + i] = p;
    at += size;
  }
  return {std::move(g), Coloring(std::move(colors))};
}

Graph distinct_parts_turan(int n, int r) {
  return complete_multipartite(PartSizes(near_consecutive_distinct(n, r)));
}

std::optional<OddGirthSplit> odd_girth_split(int n, int g) {
  if (n % 2 == 0 || g < 3 || g % 2 == 0) return std::nullopt;
  const int w = g + 6;
  for (int q = n / w; q >= 1; --q) {
    if (q % 2 == 0) continue;
    const int rest = n - w * q;
    if (rest % 2 == 0 && rest / 2 <= g + 5) return OddGirthSplit{q, rest / 2};
    break;
  }
  return std::nullopt;
}

Graph regular_odd_girth_graph(int n, int g) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("odd girth parameter must be odd and >= 3");
  if (n % 2 == 0) {
    if (n < 2) throw std::domain_error("need at least 2 vertices");
    return Graph::complete_bipartite(n / 2, n / 2);
  }
  const auto split = odd_girth_split(n, g);
  if (!split) throw std::domain_error("no decomposition n = (g+6)q + 2s with q odd, 0 <= s <= g+5");
  const int q = split->q;
  const int s = split->s;

  // K_{m,m} minus the matchings {(a_j, b_{j+i mod m})}, i = 0..s-1.
  const int m = 2 * q + s;
  Graph bip(2 * m);
  for (int j = 0; j < m; ++j)
    for (int shift = s; shift < m; ++shift) bip.add_edge(j, m + (j + shift) % m);

  const int len = g + 2;
  Graph blow(len * q);
  for (int c = 0; c < len; ++c)
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) blow.add_edge(c * q + i, ((c + 1) % len) * q + j);

  return disjoint_union(bip, blow);
}

}  // namespace singturan
