#pragma once

#include "il/error.hpp"
#include "il/graph.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace il {

/// Partition of V into an independent set and a clique.
struct split_partition {
  vertex_set independent;  // S
  vertex_set clique;       // C
};

inline bool is_valid_split_partition(const graph& g, const split_partition& p) {
  const std::size_t n = g.num_vertices();
  if (p.independent.universe() != n || p.clique.universe() != n) return false;
  if (p.independent.intersects(p.clique)) return false;
  if ((p.independent | p.clique).size() != n) return false;
  if (!is_independent(g, p.independent)) return false;
  auto c = p.clique.members();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return true;
}

inline void require_split_partition(const graph& g, const split_partition& p) {
  if (!is_valid_split_partition(g, p)) throw input_error("split partition is not valid for this graph");
}

namespace detail {

// Induced 2K2, C4 or C5, searched exhaustively over 4- and 5-subsets.
inline not_a_splitgraph split_obstruction(const graph& g) {
  const auto n = static_cast<vertex>(g.num_vertices());
  auto adj = [&](vertex a, vertex b) { return g.adjacent(a, b); };
  for (vertex a = 0; a < n; ++a)
    for (vertex b = a + 1; b < n; ++b)
      for (vertex c = b + 1; c < n; ++c)
        for (vertex d = c + 1; d < n; ++d) {
          std::array<vertex, 4> q{a, b, c, d};
          int edges = 0;
          std::array<int, 4> deg{};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (adj(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          bool all_one = std::all_of(deg.begin(), deg.end(), [](int x) { return x == 1; });
          bool all_two = std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; });
          if (edges == 2 && all_one) return not_a_splitgraph("2K2", {a, b, c, d});
          if (edges == 4 && all_two) return not_a_splitgraph("C4", {a, b, c, d});
        }
  std::vector<vertex> pick(5);
  for (pick[0] = 0; pick[0] < n; ++pick[0])
    for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
      for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
        for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
          for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
            int edges = 0;
            std::array<int, 5> deg{};
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j)
                if (adj(pick[i], pick[j])) {
                  ++edges;
                  ++deg[i];
                  ++deg[j];
                }
            // 2-regular on 5 vertices is necessarily C5.
            if (edges == 5 && std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; }))
              return not_a_splitgraph("C5", pick);
          }
  throw internal_error("split_partition: no obstruction found for a non-split graph");
}

}  // namespace detail

/// Split partition with the largest clique, lexicographically smallest clique
/// among those; not_a_splitgraph (with an induced 2K2/C4/C5) otherwise.
inline split_partition find_split_partition(const graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {vertex_set(0), vertex_set(0)};
  // Degree-sequence test: with d1 >= ... >= dn and m = max{i : d_i >= i-1},
  // g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
  std::vector<vertex> order(n);
  std::iota(order.begin(), order.end(), vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(order[i]) + 1 >= i + 1) m = i + 1;
  std::size_t top = 0, bottom = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? top : bottom) += g.degree(order[i]);
  if (top != m * (m - 1) + bottom) throw detail::split_obstruction(g);

  split_partition base{vertex_set(n), vertex_set(n)};
  for (std::size_t i = 0; i < n; ++i) (i < m ? base.clique : base.independent).insert(order[i]);
  if (!is_valid_split_partition(g, base)) throw internal_error("split_partition: degree test accepted an invalid partition");

  // Grow the clique while an independent vertex can move across.
  for (bool grown = true; grown;) {
    grown = false;
    for (vertex s : base.independent.members()) {
      split_partition cand = base;
      cand.clique.insert(s);
      cand.independent.erase(s);
      if (is_valid_split_partition(g, cand)) {
        base = cand;
        grown = true;
        break;
      }
    }
  }

  // Clique sides of maximum size differ pairwise by one swapped vertex (their
  // difference is both a clique and independent), so single swaps from one of
  // them reach all of them.
  split_partition best = base;
  for (vertex c : base.clique.members()) {
    for (vertex s : base.independent.members()) {
      split_partition cand = base;
      cand.clique.erase(c);
      cand.clique.insert(s);
      cand.independent.erase(s);
      cand.independent.insert(c);
      if (is_valid_split_partition(g, cand) && lex_less(cand.clique, best.clique)) best = cand;
    }
  }
  return best;
}

inline bool is_splitgraph(const graph& g) {
  try {
    find_split_partition(g);
    return true;
  } catch (const not_a_splitgraph&) {
    return false;
  }
}

}  // namespace il
