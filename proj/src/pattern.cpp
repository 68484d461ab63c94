#include "singturan/pattern.hpp"

#include <cctype>
#include <stdexcept>

#include "singturan/graph6.hpp"
#include "singturan/subgraphs.hpp"

namespace singturan {

PatternGraph::PatternGraph(Graph g, std::string name) : graph_(std::move(g)), name_(std::move(name)) {
  if (graph_.order() > 12) throw std::invalid_argument("pattern graphs are limited to 12 vertices");
  if (name_.empty()) name_ = to_graph6(graph_);
  chromatic_ = singturan::chromatic_number(graph_);
  odd_girth_ = singturan::odd_girth(graph_);
  automorphisms_ = singturan::automorphisms(graph_);
}

bool PatternGraph::is_clique() const noexcept {
  const int h = graph_.order();
  return graph_.edge_count() == h * (h - 1) / 2;
}

PatternGraph PatternGraph::named(const std::string& name) {
  if (name.size() < 2 || !std::isdigit(static_cast<unsigned char>(name[1])))
    throw std::invalid_argument("unknown pattern '" + name + "'");
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(name.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown pattern '" + name + "'");
  }
  if (used + 1 != name.size() || k < 1) throw std::invalid_argument("unknown pattern '" + name + "'");
  switch (name[0]) {
    case 'K':
      return PatternGraph(Graph::complete(k), name);
    case 'P':
      return PatternGraph(Graph::path(k), name);
    case 'C':
      if (k < 3) break;
      return PatternGraph(Graph::cycle(k), name);
    case 'S':
      return PatternGraph(Graph::star(k), name);
    default:
      break;
  }
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

}  // namespace singturan
