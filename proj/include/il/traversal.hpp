#pragma once

#include "il/graph.hpp"

#include <optional>
#include <queue>
#include <vector>

namespace il {

struct components_result {
  std::size_t count = 0;
  std::vector<std::size_t> component_of;  // per vertex, numbered by least member
};

inline components_result connected_components(const graph& g) {
  const std::size_t n = g.num_vertices();
  components_result r;
  r.component_of.assign(n, static_cast<std::size_t>(-1));
  std::vector<vertex> stack;
  for (vertex s = 0; s < n; ++s) {
    if (r.component_of[s] != static_cast<std::size_t>(-1)) continue;
    r.component_of[s] = r.count;
    stack.push_back(s);
    while (!stack.empty()) {
      vertex u = stack.back();
      stack.pop_back();
      for (vertex v : g.neighbors(u)) {
        if (r.component_of[v] == static_cast<std::size_t>(-1)) {
          r.component_of[v] = r.count;
          stack.push_back(v);
        }
      }
    }
    ++r.count;
  }
  return r;
}

inline std::size_t component_count(const graph& g) { return connected_components(g).count; }

/// Vertex lists per component, each sorted, components ordered by least vertex.
inline std::vector<std::vector<vertex>> component_vertex_lists(const graph& g) {
  auto c = connected_components(g);
  std::vector<std::vector<vertex>> out(c.count);
  for (vertex v = 0; v < g.num_vertices(); ++v) out[c.component_of[v]].push_back(v);
  return out;
}

inline bool is_connected(const graph& g) { return g.num_vertices() <= 1 || component_count(g) == 1; }

/// Proper 2-coloring (0/1, least vertex of each component gets 0) if one exists.
inline std::optional<std::vector<int>> two_coloring(const graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::queue<vertex> q;
  for (vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      vertex u = q.front();
      q.pop();
      for (vertex v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const graph& g) { return two_coloring(g).has_value(); }

}  // namespace il
