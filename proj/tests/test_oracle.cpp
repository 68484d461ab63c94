#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "brute.hpp"
#include "singturan/canonical.hpp"
#include "singturan/constructions.hpp"
#include "singturan/formulas.hpp"
#include "singturan/graph6.hpp"
#include "singturan/multipartite.hpp"
#include "singturan/oracle.hpp"
#include "singturan/subgraphs.hpp"

using namespace singturan;
using json = nlohmann::json;

namespace {

constexpr std::int64_t kClasses[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};

std::set<std::string> codes(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(canonical_code(g));
  return out;
}

// Maximum over all labelled graphs, straight from the definition.
std::int64_t brute_ts(int n, const Graph& h) {
  std::int64_t best = -1;
  brute::for_each_labeled(n, [&](const Graph& g) {
    if (g.edge_count() > best && brute::singular_free(g, h)) best = g.edge_count();
  });
  return best;
}

}  // namespace

TEST(Generation, ClassCounts) {
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(static_cast<std::int64_t>(enumerate_graphs(n).size()), kClasses[n]) << n;
}

TEST(Generation, RepresentativesArePairwiseNonIsomorphic) {
  for (int n = 0; n <= 8; ++n) {
    const auto gs = enumerate_graphs(n);
    EXPECT_EQ(codes(gs).size(), gs.size());
  }
}

TEST(Generation, LabeledCountsAndClasses) {
  for (int n = 0; n <= 5; ++n) {
    GenOptions o;
    o.mode = GenMode::Labeled;
    const auto gs = enumerate_graphs(n, o);
    EXPECT_EQ(static_cast<std::int64_t>(gs.size()), std::int64_t{1} << (n * (n - 1) / 2));
    EXPECT_EQ(codes(gs), codes(enumerate_graphs(n)));
  }
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(labeled_class_count(n), kClasses[n]);
}

TEST(Generation, WorkerCountDoesNotChangeOutput) {
  for (int n : {5, 7, 8}) {
    SearchStats ref_stats;
    const auto ref = enumerate_graphs_serial(n, {}, &ref_stats);
    for (int w : {1, 2, 8}) {
      GenOptions o;
      o.workers = w;
      SearchStats st;
      EXPECT_EQ(enumerate_graphs(n, o, &st), ref) << n << " w=" << w;
      EXPECT_EQ(st.examined, ref_stats.examined);
      EXPECT_EQ(st.pruned, ref_stats.pruned);
    }
  }
  for (int w : {2, 8}) EXPECT_EQ(labeled_class_count(6, w), kClasses[6]);
  GenOptions o;
  o.mode = GenMode::Labeled;
  o.workers = 8;
  GenOptions s = o;
  s.workers = 1;
  EXPECT_EQ(enumerate_graphs(5, o), enumerate_graphs(5, s));
}

TEST(Generation, EdgeWindow) {
  for (int n = 1; n <= 7; ++n) {
    const auto all = enumerate_graphs(n);
    const int m = n * (n - 1) / 2;
    for (int lo = 0; lo <= m; lo += 2)
      for (int hi = lo; hi <= m; hi += 3) {
        GenOptions o;
        o.min_edges = lo;
        o.max_edges = hi;
        std::set<std::string> want;
        for (const auto& g : all)
          if (g.edge_count() >= lo && g.edge_count() <= hi) want.insert(canonical_code(g));
        ASSERT_EQ(codes(enumerate_graphs(n, o)), want) << n << " [" << lo << "," << hi << "]";
      }
  }
}

TEST(Generation, StreamingMatchesVector) {
  std::vector<Graph> seen;
  for_each_graph(6, {}, [&](const Graph& g) { seen.push_back(g); });
  EXPECT_EQ(seen, enumerate_graphs_serial(6));
}

TEST(Generation, CostGuards) {
  EXPECT_THROW(enumerate_graphs(13), CostGuardError);
  GenOptions o;
  o.mode = GenMode::Labeled;
  EXPECT_THROW(enumerate_graphs(8, o), CostGuardError);
  EXPECT_THROW(labeled_class_count(8), CostGuardError);
  EXPECT_THROW(exact_ts(11, PatternGraph::named("K3")), CostGuardError);
  EXPECT_THROW(exact_ts(10, PatternGraph::named("C4")), CostGuardError);
  EXPECT_THROW(exact_wex(9, PatternGraph::named("P3")), CostGuardError);
  EXPECT_THROW(exact_ex(11, PatternGraph::named("K3")), CostGuardError);
  EXPECT_THROW(exact_rex(11, PatternGraph::named("K3")), CostGuardError);
  EXPECT_THROW(enumerate_graphs(-1), std::invalid_argument);
}

TEST(Exact, Examples) {
  const PatternGraph k3 = PatternGraph::named("K3");
  const PatternGraph p3 = PatternGraph::named("P3");
  const ExactResult t8 = exact_ts(8, k3);
  EXPECT_EQ(t8.value, 22);
  EXPECT_FALSE(t8.extremal.empty());
  EXPECT_TRUE(std::is_sorted(t8.extremal.begin(), t8.extremal.end()));
  EXPECT_EQ(exact_ts(6, k3).value, 13);
  EXPECT_EQ(exact_ts(7, k3).value, 16);
  EXPECT_EQ(exact_ts(4, k3).value, 5);
  EXPECT_EQ(exact_ts(8, p3).value, 18);
  EXPECT_EQ(exact_ts(6, p3).value, 11);
  EXPECT_EQ(exact_wex(8, p3).value, 20);
  EXPECT_EQ(exact_wex(8, k3).value, 24);
  EXPECT_EQ(exact_ex(8, PatternGraph::named("K5")).value, 24);
  EXPECT_EQ(exact_ex(6, PatternGraph::named("C4")).value, 7);
  EXPECT_EQ(exact_rex(8, k3).value, 16);
  EXPECT_EQ(exact_rex(7, k3).value, 7);
  EXPECT_THROW(exact_wex(5, PatternGraph::named("K2")), std::invalid_argument);
}

TEST(Exact, LargerTriangleCases) {
  const PatternGraph k3 = PatternGraph::named("K3");
  EXPECT_EQ(exact_ts(10, k3).value, 37);
  // Order nine admits a 5-chromatic extremal graph with 29 edges.
  const ExactResult nine = exact_ts(9, k3);
  EXPECT_EQ(nine.value, 29);
  EXPECT_TRUE(caro_tuza_k3_bounds(9).admits(nine.value));
  bool found_ht = false;
  const std::string ht = canonical_code(hanson_toft_graph(9, 4, 1));
  for (const auto& w : nine.extremal) found_ht |= (w == ht);
  EXPECT_TRUE(found_ht);
}

TEST(Exact, LabeledAndIsomorphFreeAgreeWithDefinition) {
  const std::vector<PatternGraph> patterns{PatternGraph::named("K3"), PatternGraph::named("P3"),
                                           PatternGraph::named("C4"), PatternGraph::named("K4")};
  for (const auto& h : patterns)
    for (int n = h.order(); n <= 6; ++n) {
      GenOptions lab;
      lab.mode = GenMode::Labeled;
      const ExactResult a = exact_ts(n, h);
      const ExactResult b = exact_ts(n, h, lab);
      EXPECT_EQ(a.value, b.value) << h.name() << " " << n;
      EXPECT_EQ(a.extremal, b.extremal);
      EXPECT_EQ(a.value, brute_ts(n, h.graph())) << h.name() << " " << n;
    }
}

TEST(Exact, WexLabeledAgrees) {
  GenOptions lab;
  lab.mode = GenMode::Labeled;
  for (const char* name : {"K3", "P3"})
    for (int n = 3; n <= 6; ++n) {
      const PatternGraph f = PatternGraph::named(name);
      EXPECT_EQ(exact_wex(n, f).value, exact_wex(n, f, lab).value) << name << n;
    }
}

TEST(Exact, WitnessesReverify) {
  const PatternGraph k3 = PatternGraph::named("K3");
  for (int n = 4; n <= 8; ++n) {
    const ExactResult r = exact_ts(n, k3);
    for (const auto& s : r.extremal) {
      const Graph g = parse_graph6(s);
      EXPECT_EQ(canonical_code(g), s);
      EXPECT_TRUE(verify_construction(g, k3, r.value).pass()) << s;
    }
    const ExactResult x = exact_rex(n, k3);
    for (const auto& s : x.extremal)
      EXPECT_TRUE(verify_construction(parse_graph6(s), k3, x.value, VerifyMode::RegularPatternFree).pass());
  }
}

TEST(Exact, SingularFreeGraphsAreWormColourable) {
  for (const char* name : {"K3", "P3"}) {
    const PatternGraph h = PatternGraph::named(name);
    for (int n = 3; n <= 7; ++n) EXPECT_LE(exact_ts(n, h).value, exact_wex(n, h).value) << name << " " << n;
  }
}

TEST(Exact, WorkerCountDoesNotChangeResult) {
  const PatternGraph k3 = PatternGraph::named("K3");
  const ExactResult ref = exact_ts(8, k3);
  for (int w : {2, 8}) {
    GenOptions o;
    o.workers = w;
    const ExactResult r = exact_ts(8, k3, o);
    EXPECT_EQ(r.value, ref.value);
    EXPECT_EQ(r.extremal, ref.extremal);
    EXPECT_EQ(r.stats.examined, ref.stats.examined);
  }
}

TEST(Exact, JsonShape) {
  const ExactResult r = exact_ts(6, PatternGraph::named("K3"));
  const json j = json::parse(r.to_json());
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["problem"], "TS");
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["pattern"], "K3");
  EXPECT_EQ(j["value"], 13);
  EXPECT_TRUE(j["witnesses"].is_array());
  EXPECT_TRUE(j["stats"]["examined"].is_number_integer());
  EXPECT_EQ(problem_from_string("rex"), Problem::REX);
  EXPECT_THROW(problem_from_string("foo"), std::invalid_argument);
}

TEST(Verify, Examples) {
  const PatternGraph k3 = PatternGraph::named("K3");
  const VerifyReport a = verify_construction(caro_tuza_k3(9), k3, 28);
  EXPECT_TRUE(a.pass());
  const VerifyReport b = verify_construction(Graph::complete(5), k3, 10);
  EXPECT_FALSE(b.pass());
  ASSERT_TRUE(b.singular);
  const json jb = json::parse(b.to_json());
  EXPECT_EQ(jb["verdict"], "FAIL");
  EXPECT_EQ(jb["witness"]["kind"], "ALL_EQUAL");
  EXPECT_TRUE(verify_construction(property_r_graph(18, 3), PatternGraph::named("K4"), 141).pass());
  // Right predicate, wrong count.
  EXPECT_FALSE(verify_construction(caro_tuza_k3(9), k3, 27).pass());
}

TEST(Verify, OtherModes) {
  const PatternGraph k4 = PatternGraph::named("K4");
  const VerifyReport t = verify_construction(turan_graph(9, 3), k4, 27, VerifyMode::PatternFree);
  EXPECT_TRUE(t.pass());
  EXPECT_TRUE(t.regular);
  const VerifyReport bad = verify_construction(Graph::complete(4), k4, 6, VerifyMode::PatternFree);
  EXPECT_FALSE(bad.pass());
  EXPECT_TRUE(bad.copy);
  EXPECT_FALSE(verify_construction(Graph::path(3), PatternGraph::named("K3"), 2, VerifyMode::RegularPatternFree).pass());
  EXPECT_THROW(verify_construction(Graph::path(3), PatternGraph::named("K3"), 2, VerifyMode::Worm),
               std::invalid_argument);
  const json j = json::parse(t.to_json());
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["degrees"]["regular"], true);
}
