#pragma once

#include <string>
#include <vector>

#include "singturan/graph.hpp"

namespace singturan {

/// Result of canonical labelling by individualisation-refinement.
struct CanonicalForm {
  /// graph6 of the canonically relabelled graph; equal iff isomorphic.
  std::string code;
  /// position[v] is the canonical label of vertex v.
  std::vector<int> position;
  /// Automorphisms discovered during the search. Together with the twin
  /// transpositions they generate the full automorphism group.
  std::vector<std::vector<int>> generators;
  /// Vertex orbits under the automorphism group: orbit[v] is the least vertex
  /// in v's orbit.
  std::vector<int> orbit;
};

/// Canonical form for graphs with at most 64 vertices; throws
/// std::invalid_argument for larger graphs.
CanonicalForm canonical_form(const Graph& g);

std::string canonical_code(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

}  // namespace singturan
