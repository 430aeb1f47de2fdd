#pragma once

#include "il/error.hpp"
#include "il/graph.hpp"

#include <vector>

namespace il {

/// Permutation diagram: vertex i (0-based) is the segment from position i+1 on
/// the top line to position pi[i] on the bottom line; pi holds 1..n.
/// Segments i and j cross iff (i - j)(pi[i] - pi[j]) < 0.
struct permutation_model {
  std::vector<std::size_t> pi;

  std::size_t size() const noexcept { return pi.size(); }

  void validate() const {
    std::vector<bool> seen(pi.size() + 1, false);
    for (auto p : pi) {
      if (p < 1 || p > pi.size() || seen[p])
        throw input_error("permutation model: not a permutation of 1.." + std::to_string(pi.size()));
      seen[p] = true;
    }
  }

  bool crosses(std::size_t i, std::size_t j) const { return (i < j) != (pi[i] < pi[j]); }

  /// y lies to the left of x: smaller on both lines (parallel, not crossing).
  bool left_of(std::size_t y, std::size_t x) const { return y < x && pi[y] < pi[x]; }
};

inline graph realize_permutation(const permutation_model& model) {
  model.validate();
  std::vector<edge> e;
  for (vertex u = 0; u < model.size(); ++u)
    for (vertex v = u + 1; v < model.size(); ++v)
      if (model.crosses(u, v)) e.emplace_back(u, v);
  return graph(model.size(), e);
}

}  // namespace il
