#include "singturan/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "singturan/constructions.hpp"
#include "singturan/multipartite.hpp"

namespace singturan {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Exact:
      return "EXACT";
    case BoundKind::Lower:
      return "LOWER";
    case BoundKind::Upper:
      return "UPPER";
  }
  return "?";
}

std::optional<FormulaValue> FormulaSet::get(BoundKind kind) const {
  for (const auto& v : values)
    if (v.kind == kind) return v;
  return std::nullopt;
}

std::optional<std::int64_t> FormulaSet::exact() const {
  if (auto v = get(BoundKind::Exact)) return v->value;
  return std::nullopt;
}

std::optional<std::int64_t> FormulaSet::lower() const {
  if (auto v = get(BoundKind::Lower)) return v->value;
  return std::nullopt;
}

std::optional<std::int64_t> FormulaSet::upper() const {
  if (auto v = get(BoundKind::Upper)) return v->value;
  return std::nullopt;
}

bool FormulaSet::admits(std::int64_t x) const {
  for (const auto& v : values) {
    if (v.kind == BoundKind::Exact && x != v.value) return false;
    if (v.kind == BoundKind::Lower && x < v.value) return false;
    if (v.kind == BoundKind::Upper && x > v.value) return false;
  }
  return true;
}

std::int64_t turan_edges(int n, int q) {
  if (q < 1) throw std::invalid_argument("t(n,q) needs q >= 1");
  if (n < 0) throw std::invalid_argument("t(n,q) needs n >= 0");
  if (n <= q) return choose2(n);
  return multipartite_edges(balanced_parts(n, q).sizes());
}

FormulaValue t_prime(int n, int r) {
  const auto parts = property_r_parts(n, r);
  const std::int64_t value = multipartite_edges(parts.sizes());
  const std::int64_t gap = turan_edges(n, r * r) - value;
  if (gap < 0 || gap > static_cast<std::int64_t>(r) * r * r)
    throw std::logic_error("t(n,r^2) - t'(n,r^2) outside [0, r^3]");
  return {value, BoundKind::Exact, "t'(n,r^2): best complete r^2-partite graph with property R"};
}

std::int64_t caro_tuza_k3_edges(int n) {
  if (n < 4) throw std::invalid_argument("caro_tuza_k3 needs n >= 4");
  const std::int64_t k = n / 4;
  switch (n % 4) {
    case 0:
      return 6 * k * k - 2;
    case 1:
      return 6 * k * k + 2 * k;
    case 2:
      return turan_edges(n, 4);
    default:
      return 6 * k * k + 8 * k + 1;
  }
}

FormulaSet ts_k3(int n) {
  if (n < 3) throw std::invalid_argument("ts_k3 needs n >= 3");
  const std::int64_t k = n / 4;
  FormulaSet out;
  switch (n % 4) {
    case 0:
      if (k == 1) out.values.push_back({5, BoundKind::Exact, "singular triangle, n = 4"});
      else out.values.push_back({6 * k * k - 2, BoundKind::Exact, "singular triangle, n = 4k: 6k^2-2"});
      break;
    case 1:
      out.values.push_back({6 * k * k + 2 * k, BoundKind::Exact, "singular triangle, n = 4k+1: 6k^2+2k"});
      break;
    case 2:
      out.values.push_back({turan_edges(n, 4), BoundKind::Exact, "singular triangle, n = 4k+2: t(n,4)"});
      break;
    default:
      out.values.push_back({6 * k * k + 8 * k + 1, BoundKind::Lower, "singular triangle, n = 4k+3: 6k^2+8k+1"});
      out.values.push_back({6 * k * k + 8 * k + 3, BoundKind::Upper, "singular triangle, n = 4k+3: 6k^2+8k+3"});
      break;
  }
  return out;
}

FormulaSet caro_tuza_k3_bounds(int n) {
  if (n < 4) throw std::invalid_argument("caro_tuza_k3_bounds needs n >= 4");
  const std::int64_t k = n / 4;
  FormulaSet out;
  auto pair = [&](std::int64_t lo, std::int64_t hi) {
    out.values.push_back({lo, BoundKind::Lower, "Caro-Tuza construction"});
    out.values.push_back({hi, BoundKind::Upper, "Caro-Tuza upper bound"});
  };
  switch (n % 4) {
    case 0:
      pair(6 * k * k - 2, 6 * k * k - 1);
      break;
    case 1:
      pair(6 * k * k + 2 * k, 6 * k * k + 3 * k - 1);
      break;
    case 2:
      out.values.push_back({turan_edges(n, 4), BoundKind::Exact, "Caro-Tuza: 4-partite Turan graph"});
      break;
    default:
      pair(6 * k * k + 8 * k + 1, 6 * k * k + 9 * k + 2);
      break;
  }
  return out;
}

FormulaValue ts_p3(int n) {
  if (n < 3) throw std::invalid_argument("ts_p3 needs n >= 3");
  const std::int64_t sq = static_cast<std::int64_t>(n) * n + 2 * n;
  if (n == 3) return {2, BoundKind::Exact, "singular P3, n = 3"};
  if (n == 4) return {5, BoundKind::Exact, "singular P3, n = 4"};
  if (n % 4 == 0) return {sq / 4 - 2, BoundKind::Exact, "singular P3, 4 | n: (n^2+2n)/4 - 2"};
  if (n % 2 == 0) return {(sq - 4) / 4, BoundKind::Exact, "singular P3, n = 2 mod 4: (n^2+2n-4)/4"};
  return {(sq - 3) / 4, BoundKind::Exact, "singular P3, n odd: (n^2+2n-3)/4"};
}

std::int64_t clique_extension_edges(int n, int r) {
  const int m = n % r;
  if (m == 0) throw std::invalid_argument("clique extension needs n = rk + m with 1 <= m <= r-1");
  const auto blocks = property_r_partition(n - m, r).sizes();
  std::int64_t joined = 0;
  for (int i = 0; i + 1 < r; ++i) joined += static_cast<std::int64_t>(r) * blocks[i];
  return t_prime(n - m, r).value + choose2(m) + m * joined;
}

std::int64_t matching_removal_edges(int n, int r) {
  const int s = matching_removal_block(n, r);
  const int m = n % r;
  const int big_n = n - m + r;
  const std::int64_t cut = r - m;
  return t_prime(big_n, r).value - (cut * (big_n - s) - choose2(cut)) - cut * (s - 1) / 2;
}

std::int64_t p3_extremal_edges(int n) {
  if (n < 5) throw std::invalid_argument("p3_extremal needs n >= 5");
  const std::int64_t a = n % 2 == 1 ? n / 2 : n / 2 - 1;
  const std::int64_t b = n - a;
  return a * b + a / 2 + b / 2;
}

std::int64_t distinct_parts_turan_edges(int n, int r) { return multipartite_edges(near_consecutive_distinct(n, r)); }

std::int64_t regular_odd_girth_edges(int n, int g) {
  if (n % 2 == 0) return static_cast<std::int64_t>(n / 2) * (n / 2);
  const auto split = odd_girth_split(n, g);
  if (!split) throw std::domain_error("no decomposition n = (g+6)q + 2s");
  return static_cast<std::int64_t>(n) * split->q;
}

FormulaSet ts_clique_bounds(int n, int r) {
  if (r < 3) throw std::invalid_argument("ts_clique_bounds needs r >= 3");
  FormulaSet out;
  const int m = n % r;
  const bool property_r = m == 0 && 2 * n >= r * r * (r + 1);
  if (property_r) {
    out.values.push_back({t_prime(n, r).value, BoundKind::Exact, "t'(n,r^2); exact for n large enough"});
    return out;
  }

  // Largest v with v <= t - n/r^2 + sqrt(n), i.e. r^2 (v - t) + n <= r^2 sqrt(n).
  const std::int64_t t = turan_edges(n, r * r);
  const std::int64_t r2 = static_cast<std::int64_t>(r) * r;
  std::int64_t v = t;
  while (true) {
    const std::int64_t a = r2 * (v + 1 - t) + n;
    if (a > 0 && a * a > r2 * r2 * n) break;
    ++v;
  }
  while (true) {
    const std::int64_t a = r2 * (v - t) + n;
    if (a <= 0 || a * a <= r2 * r2 * n) break;
    --v;
  }
  out.values.push_back({std::min(v, t), BoundKind::Upper, "t(n,r^2) - n/r^2 + sqrt(n), floored"});

  if (m != 0 && 2 * (n - m) >= r * r * (r + 1)) {
    std::int64_t best = clique_extension_edges(n, r);
    std::string source = "clique-extension construction";
    if (m <= r - 2) {
      const std::int64_t alt = matching_removal_edges(n, r);
      if (alt > best) {
        best = alt;
        source = "matching-removal construction";
      }
    }
    out.values.push_back(
        {best, BoundKind::Lower, source + " (stands in for t(n,r^2) - m(r-1)n/r^2 + C_r, C_r unspecified)"});
  }
  return out;
}

FormulaValue wex_p3(int n) {
  if (n < 3) throw std::invalid_argument("wex_p3 needs n >= 3");
  const std::int64_t sq = static_cast<std::int64_t>(n) * n + 2 * n;
  if (n % 4 == 0) return {sq / 4, BoundKind::Exact, "Goddard-Wash-Xu, 4 | n"};
  if (n % 2 == 0) return {(sq - 4) / 4, BoundKind::Exact, "Goddard-Wash-Xu, n = 2 mod 4"};
  return {(sq - 3) / 4, BoundKind::Exact, "Goddard-Wash-Xu, n odd"};
}

FormulaValue wex_clique(int n, int r) {
  if (r < 2) throw std::invalid_argument("wex_clique needs r >= 2");
  return {turan_edges(n, r * r), BoundKind::Exact, "t(n,r^2): r^2-partite Turan graph, r colours"};
}

FormulaValue wex_bipartite_upper(int n, const PatternGraph& f, std::int64_t ex_n_f) {
  if (!f.bipartite()) throw std::invalid_argument("wex_bipartite_upper needs a bipartite pattern");
  const int r = f.order() - 1;
  if (r < 2) throw std::invalid_argument("wex_bipartite_upper needs |V(F)| >= 3");
  if (ex_n_f < 0) throw std::invalid_argument("ex(n,F) must be non-negative");
  return {turan_edges(n, r) + ex_n_f, BoundKind::Upper, "ex(n,K_{r+1}) + ex(n,F)"};
}

FormulaValue wex_tree(int n, int k) {
  if (k < 2) throw std::invalid_argument("wex_tree needs k >= 2");
  if (n % (k * k) != 0) throw std::domain_error("wex_tree needs k^2 | n");
  return {turan_edges(n, k) + static_cast<std::int64_t>(k - 1) * n / 2, BoundKind::Exact,
          "tree on k+1 vertices with Erdos-Sos: t(n,k) + (k-1)n/2"};
}

FormulaValue wex_star(int n, int k) {
  if (k < 3 || k % 2 == 0) throw std::domain_error("wex_star needs k odd and >= 3");
  return {turan_edges(n, k) + static_cast<std::int64_t>(k - 1) * n / 2, BoundKind::Exact,
          "star S_k, k odd: t(n,k) + (k-1)n/2; exact for n large enough"};
}

FormulaValue brouwer_bound(int n, int r) {
  if (r < 1) throw std::invalid_argument("brouwer_bound needs r >= 1");
  if (n < 2 * r + 1) throw std::domain_error("brouwer_bound needs n >= 2r+1");
  return {turan_edges(n, r) - n / r + 1, BoundKind::Upper, "Brouwer: non-r-partite K_{r+1}-free"};
}

FormulaSet rex_values(int n, const PatternGraph& f) {
  const auto g = f.odd_girth();
  if (!g) throw std::domain_error("regular Turan bounds here need a non-bipartite pattern");
  FormulaSet out;
  const bool triangle = f.order() == 3 && f.is_clique();
  const std::int64_t nn = n;
  if (n % 2 == 0) {
    out.values.push_back({(nn / 2) * (nn / 2), triangle ? BoundKind::Exact : BoundKind::Lower,
                          "K_{n/2,n/2} is regular and bipartite"});
    return out;
  }
  if (triangle) out.values.push_back({nn * nn / 5, BoundKind::Upper, "Andrasfai: minimum degree <= 2n/5"});
  if (odd_girth_split(n, *g))
    out.values.push_back({regular_odd_girth_edges(n, *g), BoundKind::Lower, "regular odd-girth construction"});
  return out;
}

}  // namespace singturan
