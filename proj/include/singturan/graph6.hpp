#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "singturan/graph.hpp"

namespace singturan {

/// Malformed graph6 input. offset() is the byte position of the problem.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses one header-free graph6 string. Trailing line breaks are ignored.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace singturan
