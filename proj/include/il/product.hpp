#pragma once

#include "il/config.hpp"
#include "il/graph.hpp"

#include <string>
#include <vector>

namespace il {

/// Row-major id of the product vertex (g, h).
inline vertex product_vertex(vertex g, vertex h, std::size_t h_count) {
  return static_cast<vertex>(g * h_count + h);
}

/// Categorical (tensor) product: (g1,h1) ~ (g2,h2) iff g1 ~ g2 and h1 ~ h2.
/// Vertex (g,h) gets id g*|V(H)| + h and label "(g,h)".
inline graph categorical_product(const graph& g, const graph& h) {
  if (g.empty() || h.empty()) throw input_error("categorical_product: empty graph");
  const std::size_t nh = h.num_vertices();
  std::vector<edge> e;
  e.reserve(2 * g.num_edges() * h.num_edges());
  const auto he = h.edges();
  for (auto [g1, g2] : g.edges()) {
    for (auto [h1, h2] : he) {
      e.emplace_back(product_vertex(g1, h1, nh), product_vertex(g2, h2, nh));
      e.emplace_back(product_vertex(g1, h2, nh), product_vertex(g2, h1, nh));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(g.num_vertices() * nh);
  for (vertex a = 0; a < g.num_vertices(); ++a)
    for (vertex b = 0; b < nh; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  return graph(g.num_vertices() * nh, e, std::move(labels));
}

/// k-fold product G x ... x G, left-associated.
inline graph graph_power(const graph& g, std::size_t k, const limits& lim = default_limits()) {
  if (k == 0) throw input_error("graph_power: k must be positive");
  if (g.empty()) throw input_error("graph_power: empty graph");
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (size > lim.power_vertices / g.num_vertices())
      throw limit_exceeded("graph_power: vertex count", size * g.num_vertices(), lim.power_vertices);
    size *= g.num_vertices();
  }
  graph out = g;
  for (std::size_t i = 1; i < k; ++i) out = categorical_product(out, g);
  return out;
}

/// Complement of the rook's graph on an m x n grid: (i,j) ~ (i',j') iff
/// i != i' and j != j'. Vertex (i,j) has id i*n + j.
inline graph complement_rook(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw input_error("complement_rook: dimensions must be positive");
  std::vector<edge> e;
  for (vertex a = 0; a < m * n; ++a)
    for (vertex b = a + 1; b < m * n; ++b)
      if (a / n != b / n && a % n != b % n) e.emplace_back(a, b);
  return graph(m * n, e);
}

}  // namespace il
