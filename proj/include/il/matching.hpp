#pragma once

// Bipartite maximum matching (Hopcroft-Karp) and maximum independent sets of
// bipartite graphs via König's theorem.

#include "il/graph.hpp"
#include "il/oracles.hpp"

#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace il {

struct matching_result {
  std::size_t size = 0;
  std::vector<vertex> mate;  // per vertex; npos_vertex when unmatched
};

inline constexpr vertex npos_vertex = static_cast<vertex>(-1);

/// Throws input_error unless `side` is a proper 0/1 colouring of g.
inline void require_proper_colouring(const graph& g, std::span<const int> side) {
  if (side.size() != g.num_vertices()) throw input_error("bipartite: colouring size mismatch");
  for (vertex v = 0; v < g.num_vertices(); ++v) {
    if (side[v] != 0 && side[v] != 1) throw input_error("bipartite: colour must be 0 or 1");
    for (vertex u : g.neighbors(v))
      if (side[u] == side[v])
        throw input_error("bipartite: improper colouring at edge {" + std::to_string(v) + "," +
                          std::to_string(u) + "}");
  }
}

inline matching_result maximum_bipartite_matching(const graph& g, std::span<const int> side) {
  require_proper_colouring(g, side);
  const std::size_t n = g.num_vertices();
  constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
  matching_result r;
  r.mate.assign(n, npos_vertex);
  std::vector<vertex> left;
  for (vertex v = 0; v < n; ++v)
    if (side[v] == 0) left.push_back(v);
  std::vector<std::size_t> dist(n, unreached);

  auto bfs = [&]() {
    std::queue<vertex> q;
    bool found = false;
    for (vertex u : left) {
      if (r.mate[u] == npos_vertex) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = unreached;
      }
    }
    while (!q.empty()) {
      vertex u = q.front();
      q.pop();
      for (vertex w : g.neighbors(u)) {
        vertex m = r.mate[w];
        if (m == npos_vertex) {
          found = true;
        } else if (dist[m] == unreached) {
          dist[m] = dist[u] + 1;
          q.push(m);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, vertex u) -> bool {
    for (vertex w : g.neighbors(u)) {
      vertex m = r.mate[w];
      if (m == npos_vertex || (dist[m] == dist[u] + 1 && self(self, m))) {
        r.mate[u] = w;
        r.mate[w] = u;
        return true;
      }
    }
    dist[u] = unreached;
    return false;
  };

  while (bfs())
    for (vertex u : left)
      if (r.mate[u] == npos_vertex && dfs(dfs, u)) ++r.size;
  return r;
}

/// Maximum independent set of a bipartite graph: n - |maximum matching|, with
/// the witness taken as the complement of König's minimum vertex cover.
inline alpha_result bipartite_mis(const graph& g, std::span<const int> side) {
  const std::size_t n = g.num_vertices();
  auto m = maximum_bipartite_matching(g, side);
  // Alternating reachability from unmatched left vertices.
  std::vector<bool> reached(n, false);
  std::queue<vertex> q;
  for (vertex v = 0; v < n; ++v) {
    if (side[v] == 0 && m.mate[v] == npos_vertex) {
      reached[v] = true;
      q.push(v);
    }
  }
  while (!q.empty()) {
    vertex u = q.front();
    q.pop();
    for (vertex w : g.neighbors(u)) {
      if (reached[w]) continue;
      reached[w] = true;  // right vertex via a non-matching edge
      vertex back = m.mate[w];
      if (back != npos_vertex && !reached[back]) {
        reached[back] = true;
        q.push(back);
      }
    }
  }
  alpha_result r;
  r.witness = vertex_set(n);
  for (vertex v = 0; v < n; ++v)
    if ((side[v] == 0) == reached[v]) r.witness.insert(v);
  r.alpha = r.witness.size();
  if (r.alpha != n - m.size) throw internal_error("bipartite_mis: witness size differs from König bound");
  if (!is_independent(g, r.witness)) throw internal_error("bipartite_mis: witness not independent");
  return r;
}

}  // namespace il
