#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singturan/graph.hpp"
#include "singturan/pattern.hpp"

namespace singturan {

/// Total vertex colouring; colours are small non-negative integers.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> colors);

  const std::vector<int>& colors() const noexcept { return colors_; }
  int operator[](int v) const { return colors_.at(static_cast<std::size_t>(v)); }
  int size() const noexcept { return static_cast<int>(colors_.size()); }
  int distinct_colors() const;

  /// JSON array of colour ids indexed by vertex.
  std::string to_json() const;
  static Coloring from_json(const std::string& text);

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
};

/// Equal degrees share a colour; colour ids increase with degree from 0.
Coloring degree_coloring(const Graph& g);

enum class WormKind { Monochromatic, Rainbow };
std::string to_string(WormKind kind);

struct WormViolation {
  WormKind kind = WormKind::Monochromatic;
  std::vector<int> vertices;  // ascending
};

/// Distinct vertex sets spanning a copy of `f`, ascending, in lexicographic order.
std::vector<std::vector<int>> copy_vertex_sets(const Graph& g, const PatternGraph& f);

/// nullopt when `c` is an F-WORM colouring of `g`; otherwise the violating
/// copy with the least vertex set. Needs |V(F)| >= 3 and a total colouring.
std::optional<WormViolation> check_worm(const Graph& g, const PatternGraph& f, const Coloring& c);

/// Lexicographically least restricted-growth colouring that is an F-WORM
/// colouring using at most `max_colors` colours (default: n). `workers` > 1
/// splits the top of the search tree across OpenMP threads; the answer does
/// not depend on the worker count.
std::optional<Coloring> find_worm_coloring(const Graph& g, const PatternGraph& f,
                                           std::optional<int> max_colors = std::nullopt, int workers = 1);

/// Plain recursive search with the same contract, kept as the reference for
/// the parallel path.
std::optional<Coloring> find_worm_coloring_serial(const Graph& g, const PatternGraph& f,
                                                  std::optional<int> max_colors = std::nullopt);

}  // namespace singturan
