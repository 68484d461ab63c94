#pragma once

#include <cstdint>
#include <vector>

#include "singturan/graph.hpp"

namespace singturan {

/// Part sizes of a complete multipartite graph, kept in non-decreasing order.
class PartSizes {
 public:
  PartSizes() = default;
  /// Throws std::invalid_argument if any size is < 1.
  explicit PartSizes(std::vector<int> sizes);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int parts() const noexcept { return static_cast<int>(sizes_.size()); }
  int total() const noexcept { return total_; }
  /// Index of the first vertex of each part in complete_multipartite().
  std::vector<int> offsets() const;

  friend bool operator==(const PartSizes&, const PartSizes&) = default;

 private:
  std::vector<int> sizes_;
  int total_ = 0;
};

inline std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

/// Edge count C(n,2) - sum C(s_i,2) without building the graph.
std::int64_t multipartite_edges(const std::vector<int>& sizes);

/// Vertices are laid out in consecutive blocks, one per part, in PartSizes order.
Graph complete_multipartite(const PartSizes& parts);

/// Balanced partition of n into q parts (sizes differ by at most one).
PartSizes balanced_parts(int n, int q);

/// The Turán graph T(n,q).
Graph turan_graph(int n, int q);

/// uv is an edge iff u, v lie in different parts and uv is not an edge of g.
/// Parts are the consecutive blocks of `parts`.
Graph complement_within_partition(const Graph& g, const PartSizes& parts);

/// `count` pairwise distinct positive integers summing to `total` with the
/// least sum of squares (equivalently, the edge-maximal complete multipartite
/// graph with distinct part sizes). Ascending. Throws std::domain_error when
/// total < count(count+1)/2.
std::vector<int> near_consecutive_distinct(int total, int count);

}  // namespace singturan
