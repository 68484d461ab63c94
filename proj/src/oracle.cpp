#include "singturan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <exception>
#include <numeric>
#include <unordered_set>

#include <json.hpp>
#include <omp.h>

#include "singturan/canonical.hpp"
#include "singturan/graph6.hpp"
#include "singturan/multipartite.hpp"
#include "singturan/subgraphs.hpp"

namespace singturan {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  examined += o.examined;
  pruned += o.pruned;
  seconds += o.seconds;
  return *this;
}

std::string to_string(GenMode mode) { return mode == GenMode::IsomorphFree ? "ISOMORPH_FREE" : "LABELED"; }

namespace {

using GraphPredicate = std::function<bool(const Graph&)>;

struct Found {
  Graph graph;
  std::string code;  // canonical graph6; empty in labeled mode
};

struct Window {
  int lo = 0;
  int hi = 0;
};

Window window_of(int n, const GenOptions& opts) {
  const int full = static_cast<int>(choose2(n));
  Window w{std::max(0, opts.min_edges), opts.max_edges < 0 ? full : std::min(opts.max_edges, full)};
  return w;
}

void check_order(int n, int limit, const std::string& what, const std::string& advice) {
  if (n < 0) throw std::invalid_argument(what + ": n must be non-negative");
  if (n > limit)
    throw CostGuardError(what + " is limited to n <= " + std::to_string(limit) + " (got n = " + std::to_string(n) +
                         "); " + advice);
}

// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class FirstError {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(singturan_first_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

// Canonical augmentation: a node on k vertices is extended by vertex k. A
// child is kept when the new vertex could have been the canonically chosen
// one (same orbit, or an isomorphic deletion) and no isomorphic sibling was
// kept before it. Tree nodes are induced subgraphs of their descendants, so
// a hereditary filter may cut whole subtrees.
class Augmenter {
 public:
  Augmenter(int n, Window w, const GraphPredicate* node_ok, const GraphPredicate* keep)
      : n_(n), w_(w), node_ok_(node_ok), keep_(keep) {}

  void expand(const Graph& g, const std::string& code, int stop_level, std::vector<Found>& frontier,
              std::vector<Found>& out, SearchStats& st) const {
    const int k = g.order();
    if (k == n_) {
      ++st.examined;
      if (!keep_ || (*keep_)(g)) out.push_back({g, code});
      return;
    }
    if (k == stop_level) {
      frontier.push_back({g, code});
      return;
    }

    const int e = g.edge_count();
    const auto deg = g.degrees();
    const int maxdeg = k == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
    const int rest = static_cast<int>(choose2(n_) - choose2(k + 1));  // room left after the child
    const int dmin = std::max({w_.lo - e - rest, maxdeg, 0});
    const int dmax = std::min(w_.hi - e, k);

    std::int64_t in_window = 0;
    for (int d = std::max(dmin, 0); d <= dmax; ++d) in_window += binomial(k, d);
    st.pruned += (std::int64_t{1} << k) - in_window;

    std::unordered_set<std::string> seen;
    for (int d = dmin; d <= dmax; ++d) {
      std::uint64_t saturated = 0;  // vertices that would exceed degree d if joined
      for (int u = 0; u < k; ++u)
        if (deg[u] == d) saturated |= std::uint64_t{1} << u;
      for_each_subset(k, d, [&](std::uint64_t s) {
        if (s & saturated) {
          ++st.pruned;
          return;
        }
        Graph child = g.with_extra_vertices(1);
        for (std::uint64_t r = s; r != 0; r &= r - 1) child.add_edge(k, std::countr_zero(r));
        const CanonicalForm cf = canonical_form(child);
        if (seen.contains(cf.code)) return;
        if (!canonical_parent(child, cf, code)) return;
        seen.insert(cf.code);
        if (node_ok_ && !(*node_ok_)(child)) {
          ++st.pruned;
          return;
        }
        expand(child, cf.code, stop_level, frontier, out, st);
      });
    }
  }

 private:
  static std::int64_t binomial(int k, int d) {
    std::int64_t b = 1;
    for (int i = 0; i < d; ++i) b = b * (k - i) / (i + 1);
    return b;
  }

  template <class F>
  static void for_each_subset(int k, int d, F&& f) {
    if (d == 0) {
      f(std::uint64_t{0});
      return;
    }
    const std::uint64_t end = std::uint64_t{1} << k;
    for (std::uint64_t s = (std::uint64_t{1} << d) - 1; s < end;) {
      f(s);
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }

  // The vertex of maximum degree with the highest canonical position is the
  // designated last vertex; the child belongs to this parent iff deleting the
  // new vertex and deleting the designated one give isomorphic graphs.
  static bool canonical_parent(const Graph& child, const CanonicalForm& cf, const std::string& parent_code) {
    const int last = child.order() - 1;
    const int d = child.degree(last);
    int w = -1;
    for (int v = 0; v <= last; ++v)
      if (child.degree(v) == d && (w < 0 || cf.position[v] > cf.position[w])) w = v;
    if (cf.orbit[w] == cf.orbit[last]) return true;
    std::vector<int> keep;
    for (int v = 0; v <= last; ++v)
      if (v != w) keep.push_back(v);
    return canonical_code(child.induced(keep)) == parent_code;
  }

  int n_;
  Window w_;
  const GraphPredicate* node_ok_;
  const GraphPredicate* keep_;
};

std::vector<Found> run_isomorph_free(int n, Window w, const GraphPredicate* node_ok, const GraphPredicate* keep,
                                     int workers, SearchStats& st) {
  std::vector<Found> out;
  if (w.lo > w.hi) return out;
  const Augmenter aug(n, w, node_ok, keep);
  const Graph root(0);
  const std::string root_code = canonical_code(root);
  std::vector<Found> frontier;
  if (workers <= 1 || n < 5) {
    aug.expand(root, root_code, -1, frontier, out, st);
    return out;
  }

  aug.expand(root, root_code, n - 3, frontier, out, st);
  std::vector<std::vector<Found>> parts(frontier.size());
  std::vector<SearchStats> part_stats(frontier.size());
  FirstError error;
  const auto items = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t i = 0; i < items; ++i) {
    error.run([&] {
      std::vector<Found> unused;
      aug.expand(frontier[i].graph, frontier[i].code, -1, unused, parts[i], part_stats[i]);
    });
  }
  error.rethrow();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    st += part_stats[i];
    for (auto& f : parts[i]) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::pair<int, int>> graph6_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return pairs;
}

Graph from_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint64_t mask) {
  Graph g(n);
  for (std::uint64_t r = mask; r != 0; r &= r - 1) {
    const auto [u, v] = pairs[std::countr_zero(r)];
    g.add_edge(u, v);
  }
  return g;
}

std::vector<Found> run_labeled(int n, Window w, const GraphPredicate* keep, int workers, SearchStats& st) {
  const auto pairs = graph6_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const int chunks = workers <= 1 ? 1 : workers * 8;
  std::vector<std::vector<Found>> parts(chunks);
  std::vector<SearchStats> part_stats(chunks);
  FirstError error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers))
  for (int c = 0; c < chunks; ++c) {
    error.run([&] {
      const std::uint64_t begin = total * c / chunks;
      const std::uint64_t end = total * (c + 1) / chunks;
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const int e = std::popcount(mask);
        if (e < w.lo || e > w.hi) {
          ++part_stats[c].pruned;
          continue;
        }
        ++part_stats[c].examined;
        Graph g = from_mask(n, pairs, mask);
        if (!keep || (*keep)(g)) parts[c].push_back({std::move(g), {}});
      }
    });
  }
  error.rethrow();
  std::vector<Found> out;
  for (int c = 0; c < chunks; ++c) {
    st += part_stats[c];
    for (auto& f : parts[c]) out.push_back(std::move(f));
  }
  return out;
}

void check_generation(int n, GenMode mode) {
  if (mode == GenMode::Labeled)
    check_order(n, kMaxLabeledOrder, "labeled generation", "use isomorph-free mode for larger n");
  else
    check_order(n, kMaxIsomorphFreeOrder, "isomorph-free generation", "exhaustive enumeration beyond this is out of reach");
}

std::vector<Found> search(int n, Window w, GenMode mode, int workers, const GraphPredicate* node_ok,
                          const GraphPredicate* keep, SearchStats& st) {
  if (mode == GenMode::IsomorphFree) return run_isomorph_free(n, w, node_ok, keep, workers, st);
  if (!node_ok) return run_labeled(n, w, keep, workers, st);
  const GraphPredicate both = [&](const Graph& g) { return (*node_ok)(g) && (!keep || (*keep)(g)); };
  return run_labeled(n, w, &both, workers, st);
}

std::vector<Graph> graphs_of(std::vector<Found>&& found) {
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.graph));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const GenOptions& opts, SearchStats* stats) {
  check_generation(n, opts.mode);
  const auto start = std::chrono::steady_clock::now();
  SearchStats st;
  auto found = search(n, window_of(n, opts), opts.mode, opts.workers, nullptr, nullptr, st);
  st.seconds = seconds_since(start);
  if (stats) *stats = st;
  return graphs_of(std::move(found));
}

std::vector<Graph> enumerate_graphs_serial(int n, const GenOptions& opts, SearchStats* stats) {
  GenOptions serial = opts;
  serial.workers = 1;
  return enumerate_graphs(n, serial, stats);
}

void for_each_graph(int n, const GenOptions& opts, const std::function<void(const Graph&)>& visit) {
  check_generation(n, opts.mode);
  const GraphPredicate sink = [&](const Graph& g) {
    visit(g);
    return false;
  };
  SearchStats st;
  search(n, window_of(n, opts), opts.mode, 1, nullptr, &sink, st);
}

std::int64_t labeled_class_count(int n, int workers) {
  check_order(n, kMaxLabeledOrder, "labeled classification", "use isomorph-free generation for larger n");
  const auto pairs = graph6_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const int chunks = workers <= 1 ? 1 : workers * 8;
  std::vector<std::unordered_set<std::string>> sets(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers))
  for (int c = 0; c < chunks; ++c) {
    for (std::uint64_t mask = total * c / chunks; mask < total * (c + 1) / chunks; ++mask)
      sets[c].insert(canonical_code(from_mask(n, pairs, mask)));
  }
  std::unordered_set<std::string> all;
  for (auto& s : sets) all.merge(s);
  return static_cast<std::int64_t>(all.size());
}

std::string to_string(Problem p) {
  switch (p) {
    case Problem::TS:
      return "TS";
    case Problem::WEX:
      return "WEX";
    case Problem::EX:
      return "EX";
    case Problem::REX:
      return "REX";
  }
  return "?";
}

Problem problem_from_string(const std::string& s) {
  std::string up = s;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  if (up == "TS") return Problem::TS;
  if (up == "WEX") return Problem::WEX;
  if (up == "EX") return Problem::EX;
  if (up == "REX") return Problem::REX;
  throw std::invalid_argument("unknown problem '" + s + "' (expected ts, wex, ex or rex)");
}

std::string ExactResult::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["problem"] = to_string(problem);
  j["n"] = n;
  j["pattern"] = pattern;
  j["mode"] = to_string(mode);
  j["value"] = value;
  j["witnesses"] = extremal;
  j["stats"] = {{"examined", stats.examined}, {"pruned", stats.pruned}, {"seconds", stats.seconds}};
  return j.dump();
}

namespace {

// Scans single-value edge windows in the given (descending) order and stops at
// the first one containing a graph that passes the predicate.
ExactResult scan(Problem problem, int n, const PatternGraph& pattern, const GenOptions& opts,
                 const std::vector<int>& candidates, const GraphPredicate* node_ok, const GraphPredicate& keep) {
  const auto start = std::chrono::steady_clock::now();
  ExactResult res;
  res.problem = problem;
  res.n = n;
  res.pattern = pattern.name();
  res.mode = opts.mode;
  for (int t : candidates) {
    auto found = search(n, {t, t}, opts.mode, opts.workers, node_ok, &keep, res.stats);
    if (found.empty()) continue;
    res.value = t;
    for (auto& f : found) res.extremal.push_back(f.code.empty() ? canonical_code(f.graph) : f.code);
    std::sort(res.extremal.begin(), res.extremal.end());
    res.extremal.erase(std::unique(res.extremal.begin(), res.extremal.end()), res.extremal.end());
    res.stats.seconds = seconds_since(start);
    return res;
  }
  throw std::domain_error("no graph on " + std::to_string(n) + " vertices satisfies the " + to_string(problem) +
                          " predicate for " + pattern.name());
}

std::vector<int> descending(int n) {
  std::vector<int> out;
  for (int t = static_cast<int>(choose2(n)); t >= 0; --t) out.push_back(t);
  return out;
}

void check_mode(int n, const GenOptions& opts) {
  if (opts.mode == GenMode::Labeled)
    check_order(n, kMaxLabeledOrder, "labeled mode", "use isomorph-free mode for larger n");
}

}  // namespace

ExactResult exact_ts(int n, const PatternGraph& h, const GenOptions& opts) {
  const bool small = isomorphic(h.graph(), Graph::complete(3)) || isomorphic(h.graph(), Graph::path(3));
  check_order(n, small ? 10 : 9, "exact_ts for " + h.name(), "use the closed-form bounds for larger n");
  check_mode(n, opts);
  const GraphPredicate keep = [&](const Graph& g) { return is_singular_free(g, h); };
  return scan(Problem::TS, n, h, opts, descending(n), nullptr, keep);
}

ExactResult exact_wex(int n, const PatternGraph& f, const GenOptions& opts) {
  if (f.order() < 3) throw std::invalid_argument("WORM colourings need a pattern with at least 3 vertices");
  check_order(n, 8, "exact_wex", "colouring search cost grows too fast; use the closed-form values");
  check_mode(n, opts);
  const GraphPredicate keep = [&](const Graph& g) { return find_worm_coloring(g, f).has_value(); };
  return scan(Problem::WEX, n, f, opts, descending(n), nullptr, keep);
}

ExactResult exact_ex(int n, const PatternGraph& f, const GenOptions& opts) {
  check_order(n, 10, "exact_ex", "use Turán-type bounds for larger n");
  check_mode(n, opts);
  const GraphPredicate free = [&](const Graph& g) { return !contains_copy(g, f); };
  const GraphPredicate any = [](const Graph&) { return true; };
  return scan(Problem::EX, n, f, opts, descending(n), &free, any);
}

ExactResult exact_rex(int n, const PatternGraph& f, const GenOptions& opts) {
  check_order(n, 10, "exact_rex", "use the regular odd-girth construction and the degree bounds for larger n");
  check_mode(n, opts);
  std::vector<int> candidates;
  for (int d = n - 1; d >= 0; --d)
    if ((n * d) % 2 == 0) candidates.push_back(n * d / 2);
  if (candidates.empty()) candidates.push_back(0);
  const GraphPredicate free = [&](const Graph& g) { return !contains_copy(g, f); };
  const GraphPredicate regular = [](const Graph& g) { return is_regular(g); };
  return scan(Problem::REX, n, f, opts, candidates, &free, regular);
}

ExactResult exact_solve(Problem p, int n, const PatternGraph& pattern, const GenOptions& opts) {
  switch (p) {
    case Problem::TS:
      return exact_ts(n, pattern, opts);
    case Problem::WEX:
      return exact_wex(n, pattern, opts);
    case Problem::EX:
      return exact_ex(n, pattern, opts);
    case Problem::REX:
      return exact_rex(n, pattern, opts);
  }
  throw std::invalid_argument("unknown problem");
}

std::string to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::SingularFree:
      return "singular-free";
    case VerifyMode::PatternFree:
      return "pattern-free";
    case VerifyMode::RegularPatternFree:
      return "regular-pattern-free";
    case VerifyMode::Worm:
      return "worm";
  }
  return "?";
}

VerifyReport verify_construction(const Graph& g, const PatternGraph& pattern, std::int64_t predicted_edges,
                                 VerifyMode mode, const Coloring* coloring) {
  VerifyReport rep;
  rep.predicted_edges = predicted_edges;
  rep.actual_edges = g.edge_count();
  rep.mode = mode;
  rep.pattern = pattern.name();
  rep.degrees = degree_sequence(g);
  rep.regular = is_regular(g);

  auto first_copy = [&]() -> std::optional<std::vector<int>> {
    std::optional<std::vector<int>> copy;
    for_each_copy(g, pattern.graph(), pattern.automorphisms(), [&](std::span<const int> emb) {
      copy = std::vector<int>(emb.begin(), emb.end());
      return false;
    });
    return copy;
  };

  switch (mode) {
    case VerifyMode::SingularFree:
      rep.singular = find_singular_copy(g, pattern);
      rep.predicate_holds = !rep.singular;
      break;
    case VerifyMode::PatternFree:
      rep.copy = first_copy();
      rep.predicate_holds = !rep.copy;
      break;
    case VerifyMode::RegularPatternFree:
      rep.copy = first_copy();
      rep.predicate_holds = !rep.copy && rep.regular;
      break;
    case VerifyMode::Worm:
      if (!coloring) throw std::invalid_argument("WORM verification needs a colouring");
      rep.worm = check_worm(g, pattern, *coloring);
      rep.predicate_holds = !rep.worm;
      break;
  }
  return rep;
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["pattern"] = pattern;
  j["predicate"] = to_string(mode);
  j["predicted_edges"] = predicted_edges;
  j["actual_edges"] = actual_edges;
  j["predicate_holds"] = predicate_holds;
  if (mode == VerifyMode::SingularFree) j["singular_free"] = predicate_holds;
  nlohmann::json witness = nullptr;
  if (singular)
    witness = {{"kind", to_string(singular->mode)}, {"vertices", singular->vertices}, {"degrees", singular->degrees}};
  else if (worm)
    witness = {{"kind", to_string(worm->kind)}, {"vertices", worm->vertices}};
  else if (copy)
    witness = {{"kind", "COPY"}, {"vertices", *copy}};
  j["witness"] = witness;
  j["degrees"] = {{"sequence", degrees},
                  {"min", degrees.empty() ? 0 : degrees.back()},
                  {"max", degrees.empty() ? 0 : degrees.front()},
                  {"regular", regular}};
  j["verdict"] = pass() ? "PASS" : "FAIL";
  return j.dump();
}

}  // namespace singturan
