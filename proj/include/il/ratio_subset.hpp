#pragma once

// Minimum neighbourhood ratio  min_{S' != {}} |N(S')| / |S'|  over subsets of a
// set S whose neighbourhoods live in a disjoint ground set C.
//
// Dinkelbach iteration on s-t cuts: for the current ratio p/q the network has
// s->v (cap p) for v in S, v->c (infinite) for c in N(v), c->t (cap q). A cut
// with S' on the source side costs p|S \ S'| + q|N(S')|, so a minimum cut below
// p|S| exhibits S' with q|N(S')| < p|S'|. At the fixpoint the maximal source
// side is the union of all minimisers.

#include "il/flow.hpp"
#include "il/graph.hpp"
#include "il/ratio.hpp"

#include <optional>
#include <span>
#include <vector>

namespace il {

struct ratio_subset_result {
  std::vector<std::size_t> subset;  // indices into S, ascending
  ratio value;                      // |N(subset)| / |subset|
};

namespace detail {

inline std::size_t union_size(std::span<const std::vector<std::size_t>> nbr,
                              std::span<const std::size_t> subset, std::size_t ground) {
  std::vector<bool> seen(ground, false);
  std::size_t c = 0;
  for (auto i : subset)
    for (auto x : nbr[i])
      if (!seen[x]) {
        seen[x] = true;
        ++c;
      }
  return c;
}

// Elements of S on the maximal source side of the min cut for weights (p, q).
inline std::pair<capacity, std::vector<std::size_t>> ratio_cut(
    std::span<const std::vector<std::size_t>> nbr, std::size_t ground, capacity p, capacity q) {
  const std::size_t k = nbr.size();
  flow_network net(2 + k + ground, 0, 1);
  for (std::size_t i = 0; i < k; ++i) {
    net.add_arc(0, 2 + i, p);
    for (auto c : nbr[i]) net.add_arc(2 + i, 2 + k + c, flow_network::infinite);
  }
  for (std::size_t c = 0; c < ground; ++c) net.add_arc(2 + k + c, 1, q);
  auto flow = max_flow(std::move(net));
  std::vector<std::size_t> side;
  for (std::size_t i = 0; i < k; ++i)
    if (flow.cut.source_side[2 + i]) side.push_back(i);
  return {flow.value, std::move(side)};
}

}  // namespace detail

/// nbr[i] lists the ground elements (0..ground-1) adjacent to the i-th member
/// of S. Returns the inclusion-wise maximal minimiser and the minimum ratio.
inline ratio_subset_result min_ratio_subset(std::span<const std::vector<std::size_t>> nbr,
                                            std::size_t ground) {
  const std::size_t k = nbr.size();
  if (k == 0) throw input_error("min_ratio_subset: S is empty");
  for (const auto& list : nbr)
    for (auto c : list)
      if (c >= ground) throw input_error("min_ratio_subset: neighbour outside ground set");

  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  auto p = static_cast<capacity>(detail::union_size(nbr, all, ground));
  auto q = static_cast<capacity>(k);
  for (std::size_t iteration = 0; iteration <= k + 1; ++iteration) {
    auto [cut, side] = detail::ratio_cut(nbr, ground, p, q);
    if (cut < p * static_cast<capacity>(k)) {
      if (side.empty()) throw internal_error("min_ratio_subset: improving cut with empty side");
      const auto np = static_cast<capacity>(detail::union_size(nbr, side, ground));
      const auto nq = static_cast<capacity>(side.size());
      if (!(ratio(np, nq) < ratio(p, q))) throw internal_error("min_ratio_subset: no strict improvement");
      p = np;
      q = nq;
      continue;
    }
    ratio_subset_result r{std::move(side), ratio(p, q)};
    if (r.subset.empty() ||
        ratio(static_cast<capacity>(detail::union_size(nbr, r.subset, ground)),
              static_cast<capacity>(r.subset.size())) != r.value)
      throw internal_error("min_ratio_subset: maximal side is not a minimiser");
    return r;
  }
  throw internal_error("min_ratio_subset: Dinkelbach iteration did not converge");
}

/// The difference-minimisation recursion: take the maximal minimiser S1 of
/// |N(S')| - |S'| by a unit-capacity cut, then recurse on S \ S1. Returns
/// nullopt when S1 is empty (the recursion would not make progress).
///
/// This is only a cross-check: when the minimum difference is negative the
/// best ratio can sit strictly inside S1, and the result is then an upper
/// bound rather than the minimum.
inline std::optional<ratio_subset_result> min_ratio_subset_by_difference(
    std::span<const std::vector<std::size_t>> nbr, std::size_t ground) {
  if (nbr.empty()) throw input_error("min_ratio_subset: S is empty");
  auto [cut, s1] = detail::ratio_cut(nbr, ground, 1, 1);
  (void)cut;
  if (s1.empty()) return std::nullopt;
  ratio_subset_result best{
      s1, ratio(static_cast<capacity>(detail::union_size(nbr, s1, ground)), static_cast<capacity>(s1.size()))};
  std::vector<std::size_t> rest;
  std::vector<bool> in_s1(nbr.size(), false);
  for (auto i : s1) in_s1[i] = true;
  for (std::size_t i = 0; i < nbr.size(); ++i)
    if (!in_s1[i]) rest.push_back(i);
  if (rest.empty()) return best;
  std::vector<std::vector<std::size_t>> sub;
  for (auto i : rest) sub.push_back(nbr[i]);
  auto tail = min_ratio_subset_by_difference(sub, ground);
  if (!tail) return std::nullopt;
  if (tail->value < best.value) {
    for (auto& i : tail->subset) i = rest[i];
    return tail;
  }
  return best;
}

/// Graph form: S must be independent in g; nbr(v) = N_G(v). Returns vertex ids.
struct vertex_ratio_result {
  vertex_set subset;
  ratio value;  // |N(subset)| / |subset|
};

inline vertex_ratio_result min_ratio_subset(const graph& g, const vertex_set& s) {
  if (!is_independent(g, s)) throw input_error("min_ratio_subset: S is not independent");
  auto members = s.members();
  std::vector<std::size_t> ground_index(g.num_vertices(), static_cast<std::size_t>(-1));
  std::vector<vertex> ground_vertices;
  std::vector<std::vector<std::size_t>> nbr(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (vertex u : g.neighbors(members[i])) {
      if (ground_index[u] == static_cast<std::size_t>(-1)) {
        ground_index[u] = ground_vertices.size();
        ground_vertices.push_back(u);
      }
      nbr[i].push_back(ground_index[u]);
    }
  }
  auto r = min_ratio_subset(nbr, ground_vertices.size());
  vertex_ratio_result out{vertex_set(g.num_vertices()), r.value};
  for (auto i : r.subset) out.subset.insert(members[i]);
  return out;
}

}  // namespace il
