#pragma once

// Standard graph families.

#include "il/graph.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace il::gen {

inline graph edgeless(std::size_t n) { return graph(n); }

inline graph complete(std::size_t n) {
  std::vector<edge> e;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return graph(n, e);
}

inline graph path(std::size_t n) {
  std::vector<edge> e;
  for (vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return graph(n, e);
}

inline graph cycle(std::size_t n) {
  if (n < 3) throw input_error("cycle: needs at least 3 vertices");
  std::vector<edge> e;
  for (vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<vertex>((v + 1) % n));
  return graph(n, e);
}

/// Center 0, leaves 1..leaves.
inline graph star(std::size_t leaves) {
  std::vector<edge> e;
  for (vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return graph(leaves + 1, e);
}

/// Classes of the given sizes, consecutive ids, every cross-class pair adjacent.
inline graph complete_multipartite(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw input_error("complete_multipartite: empty size list");
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw input_error("complete_multipartite: class sizes must be positive");
    cls.insert(cls.end(), sizes[i], i);
  }
  std::vector<edge> e;
  for (vertex u = 0; u < cls.size(); ++u)
    for (vertex v = u + 1; v < cls.size(); ++v)
      if (cls[u] != cls[v]) e.emplace_back(u, v);
  return graph(cls.size(), e);
}

inline graph complete_multipartite(std::initializer_list<std::size_t> sizes) {
  return complete_multipartite(std::span<const std::size_t>(sizes.begin(), sizes.size()));
}

inline graph complete_bipartite(std::size_t m, std::size_t n) { return complete_multipartite({m, n}); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline graph petersen() {
  std::vector<edge> e;
  for (vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return graph(10, e);
}

/// Triangle 0,1,2 with pendant 3 attached to 0.
inline graph paw() { return graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

inline graph disjoint_union(const graph& a, const graph& b) {
  auto e = a.edges();
  const auto off = static_cast<vertex>(a.num_vertices());
  for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  return graph(a.num_vertices() + b.num_vertices(), e);
}

/// Disjoint union plus every edge between the two sides.
inline graph join(const graph& a, const graph& b) {
  auto e = a.edges();
  const auto off = static_cast<vertex>(a.num_vertices());
  for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  for (vertex u = 0; u < a.num_vertices(); ++u)
    for (vertex v = 0; v < b.num_vertices(); ++v) e.emplace_back(u, v + off);
  return graph(a.num_vertices() + b.num_vertices(), e);
}

inline graph copies(const graph& g, std::size_t count) {
  graph out(0);
  for (std::size_t i = 0; i < count; ++i) out = disjoint_union(out, g);
  return out;
}

/// G(n, p) with a caller-supplied engine.
template <class Rng>
graph random_gnp(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<edge> e;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return graph(n, e);
}

/// Random graph with maximum degree at most max_deg: edges are proposed in a
/// shuffled order and kept while both endpoints have room.
template <class Rng>
graph random_bounded_degree(std::size_t n, std::size_t max_deg, double p, Rng& rng) {
  std::vector<edge> all;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<std::size_t> deg(n, 0);
  std::vector<edge> e;
  for (auto [u, v] : all) {
    if (deg[u] < max_deg && deg[v] < max_deg && coin(rng)) {
      e.emplace_back(u, v);
      ++deg[u];
      ++deg[v];
    }
  }
  return graph(n, e);
}

}  // namespace il::gen
