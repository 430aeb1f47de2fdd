#pragma once

// Independence numbers of categorical products for structured factor classes.
// Witnesses are vertex sets of categorical_product(G, H), i.e. ids g*|V(H)|+h.

#include "il/cotree.hpp"
#include "il/generators.hpp"
#include "il/matching.hpp"
#include "il/oracles.hpp"
#include "il/product.hpp"
#include "il/split.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <span>
#include <vector>

namespace il {

/// alpha(G x H) from cotrees. Memoised on node pairs:
///   either side a leaf    -> the product is edgeless, all |V(G)||V(H)| vertices;
///   G (or H) a union      -> sum over its children;
///   both joins            -> max over alpha(G_i x H) and alpha(G x H_j).
/// Any independent set of a join-by-join product lies inside one child block
/// row or column, so the max (not the min) is the exact value.
inline alpha_result alpha_product_cographs(const cotree& tg, const cotree& th) {
  const std::size_t ng = tg.node_count(), nh = th.node_count();
  const std::size_t vh = th.vertex_count();
  constexpr std::size_t unknown = static_cast<std::size_t>(-1);
  std::vector<std::size_t> value(ng * nh, unknown);
  // For join-by-join pairs: chosen child index; [0, |children(G)|) picks G's
  // child, the rest pick H's child at offset.
  std::vector<std::size_t> pick(ng * nh, 0);

  auto solve = [&](auto&& self, std::size_t i, std::size_t j) -> std::size_t {
    std::size_t& memo = value[i * nh + j];
    if (memo != unknown) return memo;
    const auto& a = tg.node(i);
    const auto& b = th.node(j);
    std::size_t v = 0;
    if (a.kind == cotree_kind::leaf || b.kind == cotree_kind::leaf) {
      v = a.leaf_count * b.leaf_count;
    } else if (a.kind == cotree_kind::union_node) {
      for (auto c : a.children) v += self(self, c, j);
    } else if (b.kind == cotree_kind::union_node) {
      for (auto c : b.children) v += self(self, i, c);
    } else {
      std::size_t best = 0, choice = 0;
      for (std::size_t x = 0; x < a.children.size(); ++x) {
        auto s = self(self, a.children[x], j);
        if (s > best) best = s, choice = x;
      }
      for (std::size_t y = 0; y < b.children.size(); ++y) {
        auto s = self(self, i, b.children[y]);
        if (s > best) best = s, choice = a.children.size() + y;
      }
      v = best;
      pick[i * nh + j] = choice;
    }
    value[i * nh + j] = v;
    return v;
  };

  alpha_result r;
  r.alpha = solve(solve, tg.root(), th.root());
  r.witness = vertex_set(tg.vertex_count() * vh);
  auto collect = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    const auto& a = tg.node(i);
    const auto& b = th.node(j);
    if (a.kind == cotree_kind::leaf || b.kind == cotree_kind::leaf) {
      for (vertex x : tg.leaves_of(i))
        for (vertex y : th.leaves_of(j)) r.witness.insert(product_vertex(x, y, vh));
    } else if (a.kind == cotree_kind::union_node) {
      for (auto c : a.children) self(self, c, j);
    } else if (b.kind == cotree_kind::union_node) {
      for (auto c : b.children) self(self, i, c);
    } else {
      std::size_t choice = pick[i * nh + j];
      if (choice < a.children.size())
        self(self, a.children[choice], j);
      else
        self(self, i, b.children[choice - a.children.size()]);
    }
  };
  collect(collect, tg.root(), th.root());
  if (r.witness.size() != r.alpha) throw internal_error("alpha_product_cographs: witness size mismatch");
  return r;
}

namespace detail {

// Bipartite MIS of the product restricted to side-0 and side-1 vertex lists,
// witness mapped back to product ids. The two lists must be independent sets
// of the product; a violation is an internal error.
inline alpha_result product_bipartite_mis(const graph& prod, const std::vector<vertex>& side0,
                                          const std::vector<vertex>& side1) {
  std::vector<vertex> keep = side0;
  keep.insert(keep.end(), side1.begin(), side1.end());
  auto [sub, ids] = induced_subgraph(prod, std::span<const vertex>(keep));
  std::vector<int> colour(keep.size(), 1);
  std::fill_n(colour.begin(), side0.size(), 0);
  try {
    require_proper_colouring(sub, colour);
  } catch (const input_error& e) {
    throw internal_error(std::string("alpha_product_split: case graph is not bipartite: ") + e.what());
  }
  auto mis = bipartite_mis(sub, colour);
  alpha_result out{mis.alpha, vertex_set(prod.num_vertices())};
  mis.witness.for_each([&](vertex v) { out.witness.insert(ids[v]); });
  return out;
}

}  // namespace detail

/// alpha(G x H) for split graphs G = (S1, C1), H = (S2, C2). The clique block
/// C1 x C2 is the complement of a rook's graph, so an independent set meets it
/// in nothing, in one vertex, or in >= 2 vertices of one row or one column.
/// Each case is a bipartite MIS on an explicit subgraph of the product.
inline alpha_result alpha_product_split(const graph& g, const split_partition& p1, const graph& h,
                                        const split_partition& p2) {
  require_split_partition(g, p1);
  require_split_partition(h, p2);
  const std::size_t nh = h.num_vertices();
  const graph prod = categorical_product(g, h);
  const auto s1 = p1.independent.members(), c1 = p1.clique.members();
  const auto s2 = p2.independent.members(), c2 = p2.clique.members();
  auto id = [&](vertex a, vertex b) { return product_vertex(a, b, nh); };

  std::vector<vertex> s1c2, c1s2, s1s2;
  for (vertex a : s1)
    for (vertex b : c2) s1c2.push_back(id(a, b));
  for (vertex a : c1)
    for (vertex b : s2) c1s2.push_back(id(a, b));
  for (vertex a : s1)
    for (vertex b : s2) s1s2.push_back(id(a, b));

  alpha_result best{0, vertex_set(prod.num_vertices())};
  auto offer = [&](alpha_result r) {
    if (r.alpha > best.alpha) best = std::move(r);
  };

  // No rook vertex: S1xC2 + S1xS2 against C1xS2 (S1xS2 is isolated here).
  std::vector<vertex> side0 = s1c2;
  side0.insert(side0.end(), s1s2.begin(), s1s2.end());
  offer(detail::product_bipartite_mis(prod, side0, c1s2));

  // Exactly one rook vertex r: 1 + MIS of the case-0 graph minus N(r).
  for (vertex a : c1)
    for (vertex b : c2) {
      vertex r = id(a, b);
      auto away = [&](const std::vector<vertex>& xs) {
        std::vector<vertex> out;
        for (vertex x : xs)
          if (!prod.adjacent(r, x)) out.push_back(x);
        return out;
      };
      auto sub = detail::product_bipartite_mis(prod, away(side0), away(c1s2));
      sub.witness.insert(r);
      sub.alpha += 1;
      offer(std::move(sub));
    }

  // At least two rook vertices in row a: (C1xS2 + S1xS2) against
  // ({s1 not adjacent to a} x C2) + ({a} x C2).
  std::vector<vertex> rows_side0 = c1s2;
  rows_side0.insert(rows_side0.end(), s1s2.begin(), s1s2.end());
  for (vertex a : c1) {
    std::vector<vertex> other;
    for (vertex s : s1)
      if (!g.adjacent(s, a))
        for (vertex b : c2) other.push_back(id(s, b));
    for (vertex b : c2) other.push_back(id(a, b));
    offer(detail::product_bipartite_mis(prod, rows_side0, other));
  }
  // Symmetrically, two rook vertices in column b.
  for (vertex b : c2) {
    std::vector<vertex> other;
    for (vertex a : c1)
      for (vertex s : s2)
        if (!h.adjacent(s, b)) other.push_back(id(a, s));
    for (vertex a : c1) other.push_back(id(a, b));
    offer(detail::product_bipartite_mis(prod, side0, other));
  }

  if (!is_independent(prod, best.witness) || best.witness.size() != best.alpha)
    throw internal_error("alpha_product_split: invalid witness");
  return best;
}

/// alpha for complete multipartite factors: every maximal independent set of
/// the product is a generalised row (class x V(H)) or column (V(G) x class).
/// Witness lives in complete_multipartite(sizes_g) x complete_multipartite(sizes_h);
/// ties prefer a row, then the least class index.
inline alpha_result alpha_product_multipartite(std::span<const std::size_t> sizes_g,
                                               std::span<const std::size_t> sizes_h) {
  if (sizes_g.empty() || sizes_h.empty()) throw input_error("alpha_product_multipartite: empty size list");
  for (auto s : sizes_g)
    if (s == 0) throw input_error("alpha_product_multipartite: class sizes must be positive");
  for (auto s : sizes_h)
    if (s == 0) throw input_error("alpha_product_multipartite: class sizes must be positive");
  const std::size_t total_g = std::accumulate(sizes_g.begin(), sizes_g.end(), std::size_t{0});
  const std::size_t total_h = std::accumulate(sizes_h.begin(), sizes_h.end(), std::size_t{0});
  auto big_g = static_cast<std::size_t>(std::max_element(sizes_g.begin(), sizes_g.end()) - sizes_g.begin());
  auto big_h = static_cast<std::size_t>(std::max_element(sizes_h.begin(), sizes_h.end()) - sizes_h.begin());
  const std::size_t row = sizes_g[big_g] * total_h;
  const std::size_t column = sizes_h[big_h] * total_g;
  alpha_result r{std::max(row, column), vertex_set(total_g * total_h)};
  auto first_of = [](std::span<const std::size_t> sizes, std::size_t cls) {
    return std::accumulate(sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(cls), std::size_t{0});
  };
  if (row >= column) {
    std::size_t from = first_of(sizes_g, big_g);
    for (std::size_t a = from; a < from + sizes_g[big_g]; ++a)
      for (std::size_t b = 0; b < total_h; ++b) r.witness.insert(product_vertex(static_cast<vertex>(a), static_cast<vertex>(b), total_h));
  } else {
    std::size_t from = first_of(sizes_h, big_h);
    for (std::size_t a = 0; a < total_g; ++a)
      for (std::size_t b = from; b < from + sizes_h[big_h]; ++b)
        r.witness.insert(product_vertex(static_cast<vertex>(a), static_cast<vertex>(b), total_h));
  }
  return r;
}

inline alpha_result alpha_product_multipartite(std::initializer_list<std::size_t> sizes_g,
                                               std::initializer_list<std::size_t> sizes_h) {
  return alpha_product_multipartite(std::span<const std::size_t>(sizes_g.begin(), sizes_g.size()),
                                    std::span<const std::size_t>(sizes_h.begin(), sizes_h.size()));
}

/// From an independent set of G x K4 (ids g*4+t), builds an independent set S
/// of G with 4|S| >= |S'|, for max degree <= 3.
///
/// Two adjacent projected vertices s, s' can only coexist when both carry the
/// same single K4 column {t}. Repeatedly take the least conflicting s: drop
/// (s_i, t) for each conflicting neighbour s_i and fill s's column with the
/// other three copies. Each step gains 3 and loses at most 3 product vertices.
inline vertex_set extract_is_from_k4_product(const graph& g, const vertex_set& s_prime) {
  const std::size_t n = g.num_vertices();
  if (g.max_degree() > 3) throw input_error("extract_is_from_k4_product: maximum degree exceeds 3");
  if (s_prime.universe() != 4 * n) throw input_error("extract_is_from_k4_product: set is not in G x K4");
  const graph k4 = gen::complete(4);
  if (!is_independent(categorical_product(g, k4), s_prime))
    throw input_error("extract_is_from_k4_product: set is not independent in G x K4");

  std::vector<std::uint8_t> column(n, 0);  // bit t = (g, t) present
  s_prime.for_each([&](vertex x) { column[x / 4] |= static_cast<std::uint8_t>(1U << (x % 4)); });
  std::size_t total = s_prime.size();

  for (;;) {
    vertex s = static_cast<vertex>(n);
    for (vertex v = 0; v < n && s == n; ++v) {
      if (!column[v]) continue;
      for (vertex u : g.neighbors(v))
        if (column[u]) {
          s = v;
          break;
        }
    }
    if (s == n) break;
    const std::uint8_t t = column[s];
    if (std::popcount(t) != 1) throw internal_error("extract_is_from_k4_product: conflicting vertex has several copies");
    std::size_t removed = 0;
    for (vertex u : g.neighbors(s)) {
      if (!column[u]) continue;
      if (column[u] != t) throw internal_error("extract_is_from_k4_product: neighbour column differs");
      column[u] = 0;
      ++removed;
    }
    column[s] = 0xF;
    const std::size_t next = total + 3 - removed;
    if (next < total) throw internal_error("extract_is_from_k4_product: set shrank");
    total = next;
  }

  vertex_set out(n);
  for (vertex v = 0; v < n; ++v)
    if (column[v]) out.insert(v);
  if (!is_independent(g, out)) throw internal_error("extract_is_from_k4_product: result not independent");
  if (4 * out.size() < s_prime.size()) throw internal_error("extract_is_from_k4_product: result too small");
  return out;
}

}  // namespace il
