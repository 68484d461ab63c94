#include "singturan/multipartite.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace singturan {

PartSizes::PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("part list must be nonempty");
  for (int s : sizes_)
    if (s < 1) throw std::invalid_argument("part size " + std::to_string(s) + " is not positive");
  std::sort(sizes_.begin(), sizes_.end());
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

std::vector<int> PartSizes::offsets() const {
  std::vector<int> out(sizes_.size());
  int at = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    out[i] = at;
    at += sizes_[i];
  }
  return out;
}

std::int64_t multipartite_edges(const std::vector<int>& sizes) {
  std::int64_t n = 0, inside = 0;
  for (int s : sizes) {
    n += s;
    inside += choose2(s);
  }
  return choose2(n) - inside;
}

Graph complete_multipartite(const PartSizes& parts) {
  Graph g(parts.total());
  std::vector<int> block(parts.total());
  int at = 0;
  for (int p = 0; p < parts.parts(); ++p)
    for (int i = 0; i < parts.sizes()[p]; ++i) block[at++] = p;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (block[u] != block[v]) g.add_edge(u, v);
  return g;
}

PartSizes balanced_parts(int n, int q) {
  if (q < 1) throw std::invalid_argument("need at least one part");
  if (n < q) throw std::invalid_argument("balanced partition needs n >= q");
  std::vector<int> sizes(q, n / q);
  for (int i = 0; i < n % q; ++i) ++sizes[q - 1 - i];
  return PartSizes(std::move(sizes));
}

Graph turan_graph(int n, int q) {
  if (n < q) return Graph::complete(n);
  return complete_multipartite(balanced_parts(n, q));
}

Graph complement_within_partition(const Graph& g, const PartSizes& parts) {
  if (parts.total() != g.order()) throw std::invalid_argument("partition does not cover the graph");
  Graph out(g.order());
  std::vector<int> block(g.order());
  int at = 0;
  for (int p = 0; p < parts.parts(); ++p)
    for (int i = 0; i < parts.sizes()[p]; ++i) block[at++] = p;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (block[u] != block[v] && !g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<int> near_consecutive_distinct(int total, int count) {
  if (count < 1) throw std::invalid_argument("need at least one part");
  const int minimum = count * (count + 1) / 2;
  if (total < minimum)
    throw std::domain_error(std::to_string(count) + " distinct positive parts need a total of at least " +
                            std::to_string(minimum));
  // a, a+1, ..., a+count-1 with the remainder pushed onto the largest parts.
  const int base = (total - count * (count - 1) / 2) / count;
  const int rem = total - (count * base + count * (count - 1) / 2);
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = base + i + (i >= count - rem ? 1 : 0);
  return out;
}

}  // namespace singturan
