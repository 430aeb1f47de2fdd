#pragma once

// Exact exponential-time oracles. Everything else in the library is validated
// against these.

#include "il/bitset.hpp"
#include "il/config.hpp"
#include "il/graph.hpp"
#include "il/mis_enumeration.hpp"
#include "il/ratio.hpp"
#include "il/traversal.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace il {

struct alpha_result {
  std::size_t alpha = 0;
  vertex_set witness;
};

namespace detail {

// Maximum clique of the complement with greedy-colouring bounds.
template <std::size_t W>
class max_independent_set_solver {
 public:
  using set = fixed_bitset<W>;

  explicit max_independent_set_solver(const graph& g) : n_(g.num_vertices()) {
    // Renumber by non-increasing complement degree (= non-decreasing degree).
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](vertex a, vertex b) { return g.degree(a) < g.degree(b); });
    std::vector<vertex> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = static_cast<vertex>(i);
    const set all = set::prefix(n_);
    comp_.assign(n_, all);
    for (std::size_t i = 0; i < n_; ++i) {
      comp_[i].reset(i);
      for (vertex u : g.neighbors(order_[i])) comp_[i].reset(pos[u]);
    }
  }

  alpha_result solve() {
    greedy_bound();
    current_.assign(n_, 0);
    buffers_.assign(n_ + 1, {});
    expand(set::prefix(n_), 0);
    alpha_result r;
    r.alpha = best_.size();
    r.witness = vertex_set(n_);
    for (auto i : best_) r.witness.insert(order_[i]);
    return r;
  }

 private:
  struct coloured {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colours;
  };

  void greedy_bound() {
    // Repeatedly take the first remaining vertex (lowest degree first).
    set p = set::prefix(n_);
    best_.clear();
    while (p.any()) {
      std::size_t v = p.first();
      best_.push_back(v);
      p &= comp_[v];
    }
  }

  void expand(set p, std::size_t depth) {
    coloured& c = buffers_[depth];
    c.vertices.clear();
    c.colours.clear();
    set uncoloured = p;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      set q = uncoloured;
      while (q.any()) {
        std::size_t v = q.first();
        q.reset(v);
        q.and_not(comp_[v]);
        uncoloured.reset(v);
        c.vertices.push_back(v);
        c.colours.push_back(colour);
      }
    }
    for (std::size_t i = c.vertices.size(); i-- > 0;) {
      if (depth + c.colours[i] <= best_.size()) return;
      const std::size_t v = c.vertices[i];
      current_[depth] = v;
      set next = p & comp_[v];
      if (next.none()) {
        if (depth + 1 > best_.size()) best_.assign(current_.begin(), current_.begin() + depth + 1);
      } else {
        expand(next, depth + 1);
      }
      p.reset(v);
    }
  }

  std::size_t n_;
  std::vector<vertex> order_;
  std::vector<set> comp_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
  std::vector<coloured> buffers_;
};

}  // namespace detail

/// Exact independence number with a witness. Branch and bound (maximum clique
/// of the complement, colouring bound, greedy initial solution); the witness
/// is determined by the fixed branching order.
inline alpha_result alpha_exact(const graph& g, const limits& lim = default_limits()) {
  const std::size_t n = g.num_vertices();
  if (n > lim.alpha_exact_vertices)
    throw limit_exceeded("alpha_exact: vertex count", n, lim.alpha_exact_vertices);
  if (n == 0) return {0, vertex_set(0)};
  auto solve = [](const graph& h) {
    return dispatch_width(h.num_vertices(), [&]<std::size_t W>() {
      return detail::max_independent_set_solver<W>(h).solve();
    });
  };
  auto parts = component_vertex_lists(g);
  if (parts.size() == 1) return solve(g);
  // Components are independent subproblems.
  alpha_result r{0, vertex_set(n)};
  for (const auto& part : parts) {
    auto [h, ids] = induced_subgraph(g, std::span<const vertex>(part));
    auto sub = solve(h);
    r.alpha += sub.alpha;
    for (vertex v : sub.witness.members()) r.witness.insert(ids[v]);
  }
  return r;
}

struct ratio_result {
  ratio value;
  vertex_set witness;
};

/// max |I| / (|I| + |N(I)|) over nonempty independent I, by exhaustive search
/// over independent sets.
inline ratio_result a_bruteforce(const graph& g, const limits& lim = default_limits()) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw input_error("a_bruteforce: graph has no vertices");
  if (n > lim.brute_force_vertices || n > 63)
    throw limit_exceeded("a_bruteforce: vertex count", n, std::min<std::size_t>(lim.brute_force_vertices, 63));
  std::vector<std::uint64_t> adj(n, 0);
  for (vertex v = 0; v < n; ++v)
    for (vertex u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;

  std::uint64_t best_set = 0;
  std::size_t best_k = 0, best_nb = 0;
  // Depth-first over independent sets containing vertices in increasing order.
  auto visit = [&](auto&& self, std::uint64_t set, std::uint64_t nbrs, std::size_t k, vertex from) -> void {
    if (k > 0) {
      const auto nb = static_cast<std::size_t>(std::popcount(nbrs));
      // k/(k+nb) > best_k/(best_k+best_nb)
      if (best_k == 0 || k * (best_k + best_nb) > best_k * (k + nb)) {
        best_set = set;
        best_k = k;
        best_nb = nb;
      }
    }
    for (vertex v = from; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (nbrs & bit) continue;
      if (adj[v] & set) continue;
      self(self, set | bit, nbrs | adj[v], k + 1, v + 1);
    }
  };
  visit(visit, 0, 0, 0, 0);

  ratio_result r{independence_fraction(best_k, best_nb), vertex_set(n)};
  for (vertex v = 0; v < n; ++v)
    if (best_set >> v & 1U) r.witness.insert(v);
  return r;
}

struct domination_result {
  std::size_t size = 0;
  vertex_set witness;
};

/// Independent domination number i(G): the smallest maximal independent set.
inline domination_result independent_domination_exact(const graph& g,
                                                      const limits& lim = default_limits()) {
  const std::size_t n = g.num_vertices();
  if (n > lim.domination_vertices)
    throw limit_exceeded("independent_domination_exact: vertex count", n, lim.domination_vertices);
  domination_result best{n + 1, vertex_set(n)};
  for_each_maximal_independent_set(g, [&](const vertex_set& s) {
    std::size_t k = s.size();
    if (k < best.size) best = {k, s};
  });
  if (n == 0) best.size = 0;
  return best;
}

}  // namespace il
