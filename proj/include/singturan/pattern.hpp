#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singturan/graph.hpp"

namespace singturan {

/// A small forbidden graph H together with the invariants the rest of the
/// library keeps asking for.
class PatternGraph {
 public:
  explicit PatternGraph(Graph g, std::string name = {});

  /// Registry names: Kk (clique), Pk (path on k vertices), Ck (cycle),
  /// Sk (star with k leaves). Throws std::invalid_argument otherwise.
  static PatternGraph named(const std::string& name);

  const Graph& graph() const noexcept { return graph_; }
  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return graph_.order(); }
  int chromatic_number() const noexcept { return chromatic_; }
  std::optional<int> odd_girth() const noexcept { return odd_girth_; }
  bool bipartite() const noexcept { return !odd_girth_.has_value(); }
  bool is_clique() const noexcept;
  std::int64_t automorphism_count() const noexcept { return static_cast<std::int64_t>(automorphisms_.size()); }
  const std::vector<std::vector<int>>& automorphisms() const noexcept { return automorphisms_; }

 private:
  Graph graph_;
  std::string name_;
  int chromatic_ = 0;
  std::optional<int> odd_girth_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace singturan
