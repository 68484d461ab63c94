#include "singturan/catalog.hpp"

#include <stdexcept>

#include "singturan/constructions.hpp"
#include "singturan/formulas.hpp"
#include "singturan/multipartite.hpp"

namespace singturan {

namespace {

int need(const std::optional<int>& v, const std::string& flag, const std::string& name) {
  if (!v) throw std::invalid_argument(name + " needs --" + flag);
  return *v;
}

PatternGraph clique_pattern(int r) { return PatternGraph::named("K" + std::to_string(r + 1)); }

IntraStrategy intra_of(const ConstructionParams& p) {
  if (p.intra == "none") return IntraStrategy::none();
  if (p.intra == "cliques") return IntraStrategy::disjoint_cliques(need(p.k, "k", "intra cliques"));
  if (p.intra == "regular") return IntraStrategy::regular(need(p.k, "k", "intra regular"));
  if (p.intra == "matching") return IntraStrategy::maximal_matching();
  throw std::invalid_argument("unknown intra strategy '" + p.intra + "' (none, cliques, regular, matching)");
}

}  // namespace

VerifyReport BuiltConstruction::verify() const {
  return verify_construction(graph, pattern, predicted_edges, mode, coloring ? &*coloring : nullptr);
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"caro-tuza-k3", "property-r",  "clique-extension",
                                              "matching-removal", "hanson-toft", "p3-extremal",
                                              "worm-turan", "distinct-parts-turan", "regular-odd-girth",
                                              "turan", "multipartite"};
  return names;
}

BuiltConstruction build_construction(const std::string& name, const ConstructionParams& p) {
  if (name == "caro-tuza-k3") {
    const int n = need(p.n, "n", name);
    return {name, caro_tuza_k3(n), PatternGraph::named("K3"), caro_tuza_k3_edges(n), VerifyMode::SingularFree, {}};
  }
  if (name == "property-r") {
    const int n = need(p.n, "n", name), r = need(p.r, "r", name);
    return {name, property_r_graph(n, r), clique_pattern(r), t_prime(n, r).value, VerifyMode::SingularFree, {}};
  }
  if (name == "clique-extension") {
    const int n = need(p.n, "n", name), r = need(p.r, "r", name);
    return {name, clique_extension_graph(n, r), clique_pattern(r), clique_extension_edges(n, r),
            VerifyMode::SingularFree, {}};
  }
  if (name == "matching-removal") {
    const int n = need(p.n, "n", name), r = need(p.r, "r", name);
    return {name, matching_removal_graph(n, r), clique_pattern(r), matching_removal_edges(n, r),
            VerifyMode::SingularFree, {}};
  }
  if (name == "hanson-toft") {
    const int n = need(p.n, "n", name), r = need(p.r, "r", name);
    const int a = p.a.value_or(1);
    return {name, hanson_toft_graph(n, r, a), clique_pattern(r), brouwer_bound(n, r).value, VerifyMode::PatternFree,
            {}};
  }
  if (name == "p3-extremal") {
    const int n = need(p.n, "n", name);
    return {name, p3_extremal(n), PatternGraph::named("P3"), p3_extremal_edges(n), VerifyMode::SingularFree, {}};
  }
  if (name == "worm-turan") {
    const int n = need(p.n, "n", name);
    if (!p.pattern) throw std::invalid_argument(name + " needs --pattern");
    PatternGraph f = PatternGraph::named(*p.pattern);
    auto built = worm_turan_graph(n, f, intra_of(p));
    // Prediction: t(n, r) plus the closed-form size of every filler.
    const int r = f.order() - 1;
    std::int64_t predicted = turan_edges(n, r);
    const IntraStrategy intra = intra_of(p);
    const PartSizes parts = balanced_parts(n, r);
    for (int size : parts.sizes()) {
      switch (intra.kind) {
        case IntraStrategy::Kind::None:
          break;
        case IntraStrategy::Kind::DisjointCliques:
          predicted += static_cast<std::int64_t>(size / intra.param) * choose2(intra.param);
          break;
        case IntraStrategy::Kind::Regular:
          predicted += static_cast<std::int64_t>(size) * intra.param / 2;
          break;
        case IntraStrategy::Kind::MaximalMatching:
          predicted += size / 2;
          break;
      }
    }
    return {name, std::move(built.graph), std::move(f), predicted, VerifyMode::Worm, std::move(built.coloring)};
  }
  if (name == "distinct-parts-turan") {
    const int n = need(p.n, "n", name), r = need(p.r, "r", name);
    return {name, distinct_parts_turan(n, r), clique_pattern(r), distinct_parts_turan_edges(n, r),
            VerifyMode::PatternFree, {}};
  }
  if (name == "regular-odd-girth") {
    const int n = need(p.n, "n", name), g = need(p.g, "g", name);
    return {name, regular_odd_girth_graph(n, g), PatternGraph::named("C" + std::to_string(g)),
            regular_odd_girth_edges(n, g), VerifyMode::RegularPatternFree, {}};
  }
  if (name == "turan") {
    const int n = need(p.n, "n", name), r = need(p.r, "r", name);
    return {name, turan_graph(n, r), clique_pattern(r), turan_edges(n, r), VerifyMode::PatternFree, {}};
  }
  if (name == "multipartite") {
    if (p.parts.empty()) throw std::invalid_argument(name + " needs --parts");
    const PartSizes parts(p.parts);
    return {name, complete_multipartite(parts), clique_pattern(parts.parts()), multipartite_edges(parts.sizes()),
            VerifyMode::PatternFree, {}};
  }
  throw std::invalid_argument("unknown construction '" + name + "'");
}

}  // namespace singturan
