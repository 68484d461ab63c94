#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singturan/pattern.hpp"

namespace singturan {

enum class BoundKind { Exact, Lower, Upper };
std::string to_string(BoundKind kind);

/// A closed-form value together with what it claims and where it comes from.
struct FormulaValue {
  std::int64_t value = 0;
  BoundKind kind = BoundKind::Exact;
  std::string source;
};

/// The values known for one query. At most one entry per kind.
struct FormulaSet {
  std::vector<FormulaValue> values;

  std::optional<FormulaValue> get(BoundKind kind) const;
  std::optional<std::int64_t> exact() const;
  std::optional<std::int64_t> lower() const;
  std::optional<std::int64_t> upper() const;
  /// True iff `x` is consistent with every entry.
  bool admits(std::int64_t x) const;
};

/// t(n,q): edges of the balanced complete q-partite graph on n vertices.
std::int64_t turan_edges(int n, int q);

/// t'(n, r^2): edges of the best complete r^2-partite graph with property R.
/// Throws std::domain_error unless r | n and n >= r^2(r+1)/2.
FormulaValue t_prime(int n, int r);

/// Singular triangle numbers: exact for n = 4k, 4k+1, 4k+2, an interval for n = 4k+3.
FormulaSet ts_k3(int n);

/// Singular P3 numbers as stated in the literature (all n >= 3).
FormulaValue ts_p3(int n);

/// Singular K_{r+1} numbers, r >= 3. Exact value t'(n, r^2) when defined (an
/// asymptotic statement; the tag says so). Otherwise an upper bound, plus a
/// lower bound equal to the edge count of the best construction available.
FormulaSet ts_clique_bounds(int n, int r);

/// Historical singular-triangle bounds, kept for comparison tables.
FormulaSet caro_tuza_k3_bounds(int n);

/// WORM numbers of P3.
FormulaValue wex_p3(int n);
/// wex(n, K_{r+1}) = t(n, r^2).
FormulaValue wex_clique(int n, int r);
/// wex(n, F) <= t(n, r) + ex(n, F) for bipartite F on r+1 >= 3 vertices.
FormulaValue wex_bipartite_upper(int n, const PatternGraph& f, std::int64_t ex_n_f);
/// Tree on k+1 vertices (Erdős–Sós holding), k^2 | n.
FormulaValue wex_tree(int n, int k);
/// Star with k leaves, k odd, n large enough.
FormulaValue wex_star(int n, int k);

/// Upper bound for K_{r+1}-free graphs that are not r-partite; n >= 2r+1.
FormulaValue brouwer_bound(int n, int r);

/// Regular Turán numbers: exact/upper for triangles, plus the lower bound of
/// the regular odd-girth construction for any non-bipartite pattern.
FormulaSet rex_values(int n, const PatternGraph& f);

/// Closed-form edge counts of the constructions, used as their predictions.
std::int64_t caro_tuza_k3_edges(int n);
std::int64_t clique_extension_edges(int n, int r);
std::int64_t matching_removal_edges(int n, int r);
std::int64_t p3_extremal_edges(int n);
std::int64_t distinct_parts_turan_edges(int n, int r);
std::int64_t regular_odd_girth_edges(int n, int g);

}  // namespace singturan
