#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace singturan {

/// Simple undirected graph stored as a symmetric bit matrix.
///
/// Rows are packed into 64-bit words. Graphs with at most 64 vertices use a
/// single word per row, which is the fast path most kernels rely on (see
/// row64()); larger graphs use multi-word rows transparently.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph empty(int n) { return Graph(n); }
  static Graph path(int n);
  static Graph cycle(int n);
  /// Star with `leaves` leaves; vertex 0 is the centre.
  static Graph star(int leaves);
  static Graph complete_bipartite(int a, int b);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }
  int words_per_row() const noexcept { return words_; }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  /// Single-word adjacency row; only valid when order() <= 64.
  std::uint64_t row64(int v) const { return bits_[static_cast<std::size_t>(v) * words_]; }
  bool fits64() const noexcept { return n_ <= 64; }

  /// Graph whose vertex `perm[v]` plays the role of vertex `v` here.
  Graph relabeled(std::span<const int> perm) const;
  Graph induced(std::span<const int> vertices) const;
  Graph complement() const;
  /// Copy with `count` isolated vertices appended.
  Graph with_extra_vertices(int count) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(int v) const;
  std::uint64_t& word(int u, int v) {
    return bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)];
  }

  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph disjoint_union(const Graph& a, const Graph& b);

/// Degree sequence in non-increasing order.
std::vector<int> degree_sequence(const Graph& g);

/// Common degree if `g` is regular; the empty graph on 0 vertices counts as 0-regular.
std::optional<int> regular_degree(const Graph& g);
inline bool is_regular(const Graph& g) { return regular_degree(g).has_value(); }

/// Exact chromatic number by backtracking. Intended for small pattern graphs.
int chromatic_number(const Graph& g);

/// Length of the shortest odd cycle, or nullopt when `g` is bipartite.
std::optional<int> odd_girth(const Graph& g);

std::string to_dot(const Graph& g, const std::string& name = "G");
/// {"n": ..., "edges": [[u, v], ...]} with u < v, edges sorted.
std::string to_json(const Graph& g);

}  // namespace singturan
