#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "singturan/graph.hpp"
#include "singturan/multipartite.hpp"
#include "singturan/pattern.hpp"
#include "singturan/worm.hpp"

namespace singturan {

/// Lower-bound graphs for singular triangles, by n mod 4:
///   0: parts (k-1, k-1, k+1, k+1)            (empty parts dropped at n = 4)
///   1: parts (k, k, k, k) + a vertex joined to the first two parts
///   2: the Turán graph T(n, 4)
///   3: parts (k, k, k+1, k+1) + a vertex joined to the 2k vertices of the two smaller parts
/// The extra vertex, when present, is the last one. Requires n >= 4.
Graph caro_tuza_k3(int n);

/// The r distinct block sizes l_1 < ... < l_r (summing to n/r) of the
/// edge-maximal complete r^2-partite graph with property R. Throws
/// std::domain_error unless r >= 2, r | n and n >= r^2(r+1)/2.
PartSizes property_r_partition(int n, int r);

/// All r^2 part sizes: each block size of property_r_partition repeated r times.
PartSizes property_r_parts(int n, int r);

/// Complete r^2-partite graph with property R and t'(n, r^2) edges.
Graph property_r_graph(int n, int r);

/// n = rk + m, 1 <= m <= r-1: the property-R graph on rk vertices plus m
/// mutually adjacent new vertices (the last m) joined to every vertex in the
/// parts of the r-1 smallest block sizes.
Graph clique_extension_graph(int n, int r);

/// n = rk + m, 1 <= m <= r-2, r >= 3: start from the property-R graph on
/// r(k+1) vertices, delete one vertex from each of r-m parts of a common odd
/// size, then delete a perfect matching spanning the shrunken parts. Among the
/// odd block sizes the one leaving the most edges is used (ties: larger size).
Graph matching_removal_graph(int n, int r);

/// The odd block size matching_removal_graph() shrinks.
int matching_removal_block(int n, int r);

/// K_{r+1}-free, chromatic number r+1: T(n-1, r), plus an apex joined to all
/// classes but the two smallest X, Y, to one vertex u of X and to a set A of
/// `a_size` vertices of Y, with the u-A edges removed. The apex is the last vertex.
Graph hanson_toft_graph(int n, int r, int a_size = 1);

/// Complete bipartite graph (balanced for odd n, sides n/2-1 and n/2+1 for
/// even n) with a maximal matching inside each side; in an odd side the
/// highest-indexed vertex stays unmatched. Requires n >= 5.
Graph p3_extremal(int n);

/// How the parts of the balanced complete r-partite host are filled.
struct IntraStrategy {
  enum class Kind { None, DisjointCliques, Regular, MaximalMatching };
  Kind kind = Kind::None;
  int param = 0;

  static IntraStrategy none() { return {Kind::None, 0}; }
  /// part_size / k vertex-disjoint copies of K_k per part.
  static IntraStrategy disjoint_cliques(int k) { return {Kind::DisjointCliques, k}; }
  /// A d-regular circulant in every part.
  static IntraStrategy regular(int d) { return {Kind::Regular, d}; }
  static IntraStrategy maximal_matching() { return {Kind::MaximalMatching, 0}; }
};

struct ColoredGraph {
  Graph graph;
  Coloring coloring;
};

/// Balanced complete r-partite graph, r = |V(F)| - 1, with an F-free graph
/// inside every part; the colouring is the part index. Throws
/// std::domain_error if the strategy is infeasible or the filler contains F.
ColoredGraph worm_turan_graph(int n, const PatternGraph& f, IntraStrategy intra);

/// Edge-maximal complete r-partite graph with pairwise distinct part sizes.
Graph distinct_parts_turan(int n, int r);

/// n odd written as (g+6)q + 2s with q odd and 0 <= s <= g+5.
struct OddGirthSplit {
  int q = 0;
  int s = 0;
};
std::optional<OddGirthSplit> odd_girth_split(int n, int g);

/// Regular graph of odd girth > g. Even n: K_{n/2,n/2}. Odd n: K_{2q+s,2q+s}
/// minus s cyclic perfect matchings, disjoint from the blow-up of C_{g+2} by
/// independent q-sets; 2q-regular.
Graph regular_odd_girth_graph(int n, int g);

}  // namespace singturan
