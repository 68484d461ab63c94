#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "singturan/graph.hpp"

namespace singturan {

/// Visitor for vertex tuples; return false to stop the enumeration early.
using TupleVisitor = std::function<bool(std::span<const int>)>;

/// Calls `visit` on every k-clique as an ascending vertex list, in
/// lexicographic order. Returns false if the visitor stopped early.
bool for_each_clique(const Graph& g, int k, const TupleVisitor& visit);
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k);
bool has_clique(const Graph& g, int k);

/// All injective edge-preserving maps from `pattern` into itself.
std::vector<std::vector<int>> automorphisms(const Graph& pattern);

/// Enumerates non-induced copies of `pattern` in `host`. Each copy (image
/// vertex set plus image edge set) is reported exactly once, through the
/// embedding that is lexicographically least among its automorphic images;
/// embedding[i] is the host vertex playing pattern vertex i. `auts` must be
/// automorphisms(pattern).
bool for_each_copy(const Graph& host, const Graph& pattern, const std::vector<std::vector<int>>& auts,
                   const TupleVisitor& visit);

/// Raw injective homomorphisms (every automorphic image separately).
bool for_each_embedding(const Graph& host, const Graph& pattern, const TupleVisitor& visit);

}  // namespace singturan
