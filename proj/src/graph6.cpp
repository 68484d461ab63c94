#include "singturan/graph6.hpp"

#include <algorithm>
#include <cstdint>

namespace singturan {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

void put_size(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kMaxByte));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(kMaxByte));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(std::string_view text, std::size_t at) {
  if (at >= text.size()) throw Graph6Error("unexpected end of graph6 data", at);
  const int c = static_cast<unsigned char>(text[at]);
  if (c < kBias || c > kMaxByte) throw Graph6Error("byte outside the graph6 alphabet", at);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (sextet(text, 0) != kMaxByte - kBias) {
    n = sextet(text, 0);
    pos = 1;
  } else if (text.size() > 1 && sextet(text, 1) != kMaxByte - kBias) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text, i);
    pos = 8;
  }
  if (n > (1 << 20)) throw Graph6Error("graph too large", 0);

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected)
    throw Graph6Error("length mismatch: expected " + std::to_string(expected) + " bytes, got " +
                          std::to_string(text.size()),
                      std::min(text.size(), expected));

  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t at = pos; at < text.size(); ++at) sextet(text, at);
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  put_size(out, n);
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace singturan
