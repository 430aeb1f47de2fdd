#pragma once

// Maximal independent sets as maximal cliques of the complement, by
// Bron-Kerbosch with pivoting. The pivot is the vertex u of P u X with the most
// complement-neighbours inside P (lowest id on ties); branching runs over
// P \ N_H(u) in ascending id order. Output order is therefore deterministic.

#include "il/bitset.hpp"
#include "il/graph.hpp"

#include <cstddef>
#include <vector>

namespace il {

namespace detail {

template <std::size_t W>
class mis_enumerator {
 public:
  using set = fixed_bitset<W>;

  explicit mis_enumerator(const graph& g) : n_(g.num_vertices()), closed_(fixed_rows<W>(g)) {
    for (std::size_t v = 0; v < n_; ++v) closed_[v].set(v);
  }

  /// Root branches of the search tree; [first, last) slices are disjoint and
  /// their union covers every maximal independent set exactly once.
  std::size_t root_branch_count() const {
    set p = set::prefix(n_);
    if (p.none()) return 1;
    return (p & closed_[pivot(p, set{})]).count();
  }

  template <class F>
  void run(F&& emit, std::size_t first = 0, std::size_t last = static_cast<std::size_t>(-1)) {
    set r{}, p = set::prefix(n_), x{};
    if (p.none()) {
      if (first == 0 && last > 0) emit(r);
      return;
    }
    const std::size_t u = pivot(p, x);
    const set branch = p & closed_[u];
    std::size_t index = 0;
    branch.for_each([&](std::size_t v) {
      if (index >= first && index < last) {
        set r2 = r;
        r2.set(v);
        set p2 = p;
        p2.and_not(closed_[v]);
        set x2 = x;
        x2.and_not(closed_[v]);
        recurse(r2, p2, x2, emit);
      }
      p.reset(v);
      x.set(v);
      ++index;
    });
  }

 private:
  std::size_t pivot(const set& p, const set& x) const {
    std::size_t best = fixed_bitset<W>::npos, best_cover = static_cast<std::size_t>(-1);
    auto consider = [&](std::size_t u) {
      // |P \ N_H(u)| = |P n N_G[u]|: smaller means more complement neighbours.
      std::size_t cover = p.count_and(closed_[u]);
      if (cover < best_cover || (cover == best_cover && u < best)) {
        best_cover = cover;
        best = u;
      }
    };
    (p | x).for_each(consider);
    return best;
  }

  template <class F>
  void recurse(const set& r, set p, set x, F& emit) {
    if (p.none()) {
      if (x.none()) emit(r);
      return;
    }
    const std::size_t u = pivot(p, x);
    const set branch = p & closed_[u];
    branch.for_each([&](std::size_t v) {
      set r2 = r;
      r2.set(v);
      set p2 = p;
      p2.and_not(closed_[v]);
      set x2 = x;
      x2.and_not(closed_[v]);
      recurse(r2, p2, x2, emit);
      p.reset(v);
      x.set(v);
    });
  }

  std::size_t n_;
  std::vector<set> closed_;  // closed neighbourhoods N_G[v]
};

}  // namespace detail

/// Streams every maximal independent set of g exactly once to f(const vertex_set&).
/// The optional [first, last) range restricts to a slice of the root branches
/// (see maximal_independent_set_root_branches) for parallel consumers.
template <class F>
void for_each_maximal_independent_set(const graph& g, F&& f, std::size_t first = 0,
                                      std::size_t last = static_cast<std::size_t>(-1)) {
  const std::size_t n = g.num_vertices();
  dispatch_width(n, [&]<std::size_t W>() {
    detail::mis_enumerator<W> e(g);
    e.run([&](const fixed_bitset<W>& s) { f(vertex_set::from_fixed(n, s)); }, first, last);
  });
}

inline std::size_t maximal_independent_set_root_branches(const graph& g) {
  return dispatch_width(g.num_vertices(), [&]<std::size_t W>() {
    return detail::mis_enumerator<W>(g).root_branch_count();
  });
}

inline std::vector<vertex_set> enumerate_maximal_independent_sets(const graph& g) {
  std::vector<vertex_set> out;
  for_each_maximal_independent_set(g, [&](const vertex_set& s) { out.push_back(s); });
  return out;
}

inline std::size_t count_maximal_independent_sets(const graph& g) {
  std::size_t c = 0;
  dispatch_width(g.num_vertices(), [&]<std::size_t W>() {
    detail::mis_enumerator<W> e(g);
    e.run([&](const fixed_bitset<W>&) { ++c; });
  });
  return c;
}

}  // namespace il
