#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singturan/graph.hpp"
#include "singturan/oracle.hpp"
#include "singturan/pattern.hpp"
#include "singturan/worm.hpp"

namespace singturan {

/// Parameters of a named construction; each construction reads the ones it needs.
struct ConstructionParams {
  std::optional<int> n, r, g, a, k;
  std::vector<int> parts;
  std::optional<std::string> pattern;
  std::string intra = "none";  // worm-turan: none | cliques | regular | matching
};

/// A built construction, its closed-form edge prediction and the predicate it
/// is supposed to satisfy.
struct BuiltConstruction {
  std::string name;
  Graph graph;
  PatternGraph pattern;
  std::int64_t predicted_edges = 0;
  VerifyMode mode = VerifyMode::SingularFree;
  std::optional<Coloring> coloring;

  VerifyReport verify() const;
};

/// caro-tuza-k3, property-r, clique-extension, matching-removal, hanson-toft,
/// p3-extremal, worm-turan, distinct-parts-turan, regular-odd-girth, turan,
/// multipartite.
const std::vector<std::string>& construction_names();

/// Throws std::invalid_argument for unknown names or missing parameters.
BuiltConstruction build_construction(const std::string& name, const ConstructionParams& p);

}  // namespace singturan
