#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singturan/graph.hpp"
#include "singturan/pattern.hpp"

namespace singturan {

enum class SingularMode { AllEqual, AllDistinct };

std::string to_string(SingularMode mode);

/// A copy of the pattern whose vertices have all-equal or pairwise distinct
/// degrees in the host graph.
struct SingularWitness {
  std::vector<int> vertices;  // ascending
  SingularMode mode = SingularMode::AllEqual;
  std::vector<int> degrees;   // host degrees, aligned with `vertices`
};

/// The singular copy with the lexicographically least vertex set, if any.
/// Throws std::invalid_argument when the pattern has fewer than 2 vertices.
std::optional<SingularWitness> find_singular_copy(const Graph& g, const PatternGraph& h);

bool is_singular_free(const Graph& g, const PatternGraph& h);

/// True iff `g` contains any (non-induced) copy of `h`.
bool contains_copy(const Graph& g, const PatternGraph& h);

}  // namespace singturan
