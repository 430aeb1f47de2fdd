#pragma once

#include "il/error.hpp"
#include "il/graph.hpp"

#include <cstdint>
#include <vector>

namespace il {

/// Closed interval with integer endpoints; touching endpoints intersect.
struct interval {
  std::int64_t left = 0;
  std::int64_t right = 0;

  bool intersects(const interval& o) const { return left <= o.right && o.left <= right; }
  friend bool operator==(const interval&, const interval&) = default;
};

/// One interval per vertex, in vertex order.
struct interval_model {
  std::vector<interval> intervals;

  std::size_t size() const noexcept { return intervals.size(); }

  void validate() const {
    for (std::size_t i = 0; i < intervals.size(); ++i)
      if (intervals[i].left > intervals[i].right)
        throw input_error("interval model: vertex " + std::to_string(i) + " has left > right");
  }
};

inline graph realize_interval(const interval_model& model) {
  model.validate();
  std::vector<edge> e;
  const auto& iv = model.intervals;
  for (vertex u = 0; u < iv.size(); ++u)
    for (vertex v = u + 1; v < iv.size(); ++v)
      if (iv[u].intersects(iv[v])) e.emplace_back(u, v);
  return graph(iv.size(), e);
}

}  // namespace il
