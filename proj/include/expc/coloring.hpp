#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "expc/errors.hpp"
#include "expc/graph.hpp"

namespace expc {

using Color = std::uint32_t;

/// A color per vertex, 1-based, drawn from a declared palette [1, palette].
class Coloring {
 public:
  Coloring() = default;

  Coloring(std::vector<Color> assignment, Color palette)
      : assignment_(std::move(assignment)), palette_(palette) {
    for (std::size_t v = 0; v < assignment_.size(); ++v)
      if (assignment_[v] < 1 || assignment_[v] > palette_)
        throw InvalidArgument("color " + std::to_string(assignment_[v]) + " of vertex " + std::to_string(v) +
                              " outside palette [1," + std::to_string(palette_) + "]");
  }

  std::size_t size() const noexcept { return assignment_.size(); }
  Color palette() const noexcept { return palette_; }
  Color operator[](Vertex v) const { return assignment_.at(v); }
  const std::vector<Color>& assignment() const noexcept { return assignment_; }

  /// Number of distinct colors actually used.
  std::size_t colors_used() const {
    std::vector<char> seen(palette_ + 1, 0);
    std::size_t used = 0;
    for (Color c : assignment_)
      if (!seen[c]) {
        seen[c] = 1;
        ++used;
      }
    return used;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> assignment_;
  Color palette_ = 0;
};

/// Proper iff endpoints of every edge differ; any loop makes it improper.
inline bool is_proper_coloring(const Graph& g, const Coloring& psi) {
  if (psi.size() != g.order())
    throw InvalidArgument("coloring has " + std::to_string(psi.size()) + " entries for a graph of order " +
                          std::to_string(g.order()));
  if (!g.is_simple()) return false;
  for (const auto& e : g.edges())
    if (psi[e.u] == psi[e.v]) return false;
  return true;
}

}  // namespace expc
