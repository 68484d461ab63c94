#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "singturan/graph.hpp"
#include "singturan/pattern.hpp"
#include "singturan/singular.hpp"
#include "singturan/worm.hpp"

namespace singturan {

/// Thrown when a request exceeds what exhaustive search can finish; the
/// message says what to use instead.
class CostGuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class GenMode { IsomorphFree, Labeled };
std::string to_string(GenMode mode);

struct GenOptions {
  GenMode mode = GenMode::IsomorphFree;
  int min_edges = 0;
  int max_edges = -1;  // -1: no upper limit
  int workers = 1;
};

struct SearchStats {
  std::int64_t examined = 0;  // complete n-vertex graphs handed to the predicate
  std::int64_t pruned = 0;    // extensions discarded before labelling (edge window, filters)
  double seconds = 0.0;

  SearchStats& operator+=(const SearchStats& o);
};

/// Largest n each mode accepts.
constexpr int kMaxIsomorphFreeOrder = 12;
constexpr int kMaxLabeledOrder = 7;

/// One representative per isomorphism class (or, in labeled mode, every
/// labelled graph) with an edge count inside the window. The order of the
/// result is fixed by the algorithm and does not depend on `workers`.
std::vector<Graph> enumerate_graphs(int n, const GenOptions& opts = {}, SearchStats* stats = nullptr);
/// Single-threaded reference for enumerate_graphs (ignores opts.workers).
std::vector<Graph> enumerate_graphs_serial(int n, const GenOptions& opts = {}, SearchStats* stats = nullptr);
/// Streams the same sequence as enumerate_graphs_serial.
void for_each_graph(int n, const GenOptions& opts, const std::function<void(const Graph&)>& visit);

/// Number of isomorphism classes among all labelled graphs on n <= 7
/// vertices, by canonical-code classification.
std::int64_t labeled_class_count(int n, int workers = 1);

enum class Problem { TS, WEX, EX, REX };
std::string to_string(Problem p);
Problem problem_from_string(const std::string& s);

struct ExactResult {
  Problem problem = Problem::TS;
  int n = 0;
  std::string pattern;
  GenMode mode = GenMode::IsomorphFree;
  std::int64_t value = 0;
  std::vector<std::string> extremal;  // canonical graph6, sorted
  SearchStats stats;

  std::string to_json() const;
};

/// Largest edge count of an n-vertex graph with no singular copy of h.
/// n <= 10 for K3 and P3, n <= 9 otherwise.
ExactResult exact_ts(int n, const PatternGraph& h, const GenOptions& opts = {});
/// Largest edge count of an n-vertex graph admitting an F-WORM colouring. n <= 8.
ExactResult exact_wex(int n, const PatternGraph& f, const GenOptions& opts = {});
/// Turán number ex(n, F). n <= 10.
ExactResult exact_ex(int n, const PatternGraph& f, const GenOptions& opts = {});
/// Largest edge count of a regular F-free graph on n vertices. n <= 10.
ExactResult exact_rex(int n, const PatternGraph& f, const GenOptions& opts = {});

ExactResult exact_solve(Problem p, int n, const PatternGraph& pattern, const GenOptions& opts = {});

enum class VerifyMode { SingularFree, PatternFree, RegularPatternFree, Worm };
std::string to_string(VerifyMode mode);

struct VerifyReport {
  std::int64_t predicted_edges = 0;
  std::int64_t actual_edges = 0;
  VerifyMode mode = VerifyMode::SingularFree;
  std::string pattern;
  bool predicate_holds = false;
  std::optional<SingularWitness> singular;
  std::optional<WormViolation> worm;
  std::optional<std::vector<int>> copy;  // a copy of the pattern, when it should not exist
  std::vector<int> degrees;              // non-increasing
  bool regular = false;

  bool pass() const { return predicate_holds && predicted_edges == actual_edges; }
  std::string to_json() const;
};

/// Checks a construction against its predicted edge count and its predicate.
/// Worm mode needs `coloring`.
VerifyReport verify_construction(const Graph& g, const PatternGraph& pattern, std::int64_t predicted_edges,
                                 VerifyMode mode = VerifyMode::SingularFree, const Coloring* coloring = nullptr);

}  // namespace singturan
