#pragma once

#include "il/bitset.hpp"
#include "il/error.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace il {

using edge = std::pair<vertex, vertex>;

/// Undirected simple graph on dense vertex ids 0..n-1. Immutable once built.
///
/// Adjacency is kept as sorted lists; graphs up to `dense_row_limit` vertices
/// also carry bitset rows, which the exact oracles and enumerators require.
class graph {
 public:
  static constexpr std::size_t dense_row_limit = 8192;

  graph() = default;

  explicit graph(std::size_t n) : n_(n), adj_(n) { build_rows(); }

  /// Duplicate edges are merged; self-loops and out-of-range ids are rejected.
  graph(std::size_t n, std::span<const edge> edges, std::vector<std::string> labels = {})
      : n_(n), adj_(n), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n_)
      throw input_error("graph: label count does not match vertex count");
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw input_error("graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} out of range for n=" + std::to_string(n));
      if (u == v) throw input_error("graph: self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      m_ += list.size();
    }
    m_ /= 2;
    build_rows();
  }

  graph(std::size_t n, std::initializer_list<edge> edges)
      : graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0; }

  std::span<const vertex> neighbors(vertex v) const { return adj_.at(v); }
  std::size_t degree(vertex v) const { return adj_.at(v).size(); }

  bool adjacent(vertex u, vertex v) const {
    if (has_rows()) return rows_[u].contains(v);
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  bool has_rows() const noexcept { return !rows_.empty() || n_ == 0; }

  /// Open neighborhood of v as a bitset.
  const vertex_set& row(vertex v) const {
    if (!has_rows()) throw limit_exceeded("graph: bitset rows", n_, dense_row_limit);
    return rows_.at(v);
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& l : adj_) d = std::max(d, l.size());
    return d;
  }

  std::size_t min_degree() const {
    if (n_ == 0) return 0;
    std::size_t d = n_;
    for (const auto& l : adj_) d = std::min(d, l.size());
    return d;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(m_);
    for (vertex u = 0; u < n_; ++u)
      for (vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::string label(vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
  }

  graph with_labels(std::vector<std::string> labels) const {
    auto e = edges();
    return graph(n_, e, std::move(labels));
  }

  /// Same vertex count and edge set; labels are ignored.
  friend bool operator==(const graph& a, const graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void build_rows() {
    if (n_ == 0 || n_ > dense_row_limit) return;
    rows_.assign(n_, vertex_set(n_));
    for (vertex u = 0; u < n_; ++u)
      for (vertex v : adj_[u]) rows_[u].insert(v);
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<vertex>> adj_;
  std::vector<vertex_set> rows_;
  std::vector<std::string> labels_;
};

/// Rows of g packed into fixed-width bitsets for the exponential routines.
template <std::size_t W>
std::vector<fixed_bitset<W>> fixed_rows(const graph& g) {
  std::vector<fixed_bitset<W>> rows(g.num_vertices());
  for (vertex v = 0; v < g.num_vertices(); ++v)
    for (vertex u : g.neighbors(v)) rows[v].set(u);
  return rows;
}

/// Subgraph induced by `keep` (in the given order); returns the graph and the
/// original id of each new vertex.
inline std::pair<graph, std::vector<vertex>> induced_subgraph(const graph& g,
                                                              std::span<const vertex> keep) {
  std::vector<vertex> index(g.num_vertices(), static_cast<vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<vertex>(i);
  std::vector<edge> e;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (vertex u : g.neighbors(keep[i]))
      if (index[u] != static_cast<vertex>(-1) && index[u] > i)
        e.emplace_back(static_cast<vertex>(i), index[u]);
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (vertex v : keep) labels.push_back(g.labels()[v]);
  return {graph(keep.size(), e, std::move(labels)), std::vector<vertex>(keep.begin(), keep.end())};
}

inline std::pair<graph, std::vector<vertex>> induced_subgraph(const graph& g, const vertex_set& keep) {
  auto m = keep.members();
  return induced_subgraph(g, std::span<const vertex>(m));
}

/// N(S) = { v : some u in S is adjacent to v }.
inline vertex_set neighborhood(const graph& g, const vertex_set& s) {
  vertex_set out(g.num_vertices());
  s.for_each([&](vertex u) {
    for (vertex v : g.neighbors(u)) out.insert(v);
  });
  return out;
}

inline bool is_independent(const graph& g, const vertex_set& s) {
  bool ok = true;
  s.for_each([&](vertex u) {
    for (vertex v : g.neighbors(u))
      if (s.contains(v)) ok = false;
  });
  return ok;
}

/// Independent and no vertex outside can be added.
inline bool is_maximal_independent(const graph& g, const vertex_set& s) {
  if (!is_independent(g, s)) return false;
  vertex_set closed = neighborhood(g, s) | s;
  return closed.size() == g.num_vertices();
}

inline graph complement(const graph& g) {
  std::vector<edge> e;
  for (vertex u = 0; u < g.num_vertices(); ++u)
    for (vertex v = u + 1; v < g.num_vertices(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return graph(g.num_vertices(), e, g.labels());
}

}  // namespace il
