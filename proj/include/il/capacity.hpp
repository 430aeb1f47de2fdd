#pragma once

// a(G) = max over nonempty independent I of |I| / (|I| + |N(I)|), its
// truncation a*(G), and the tensor capacity Theta^T(G) = a*(G), computed by
// class-specific exact engines.

#include "il/cotree.hpp"
#include "il/generators.hpp"
#include "il/interval.hpp"
#include "il/matching.hpp"
#include "il/mis_enumeration.hpp"
#include "il/oracles.hpp"
#include "il/permutation.hpp"
#include "il/product.hpp"
#include "il/ratio_subset.hpp"
#include "il/split.hpp"
#include "il/traversal.hpp"
#include "il/tree_decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

namespace il {

enum class engine_kind { cograph, split, interval, permutation, treewidth, general, brute };

inline std::string_view engine_name(engine_kind e) {
  switch (e) {
    case engine_kind::cograph: return "cograph";
    case engine_kind::split: return "split";
    case engine_kind::interval: return "interval";
    case engine_kind::permutation: return "permutation";
    case engine_kind::treewidth: return "treewidth";
    case engine_kind::general: return "general";
    case engine_kind::brute: return "brute";
  }
  return "unknown";
}

/// ell[k] = min |N(I)| over independent I with |I| = k; nullopt when no such I.
struct neighborhood_profile {
  std::vector<std::optional<std::size_t>> ell;

  std::size_t max_size() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < ell.size(); ++i)
      if (ell[i]) k = i;
    return k;
  }
  std::optional<std::size_t> at(std::size_t k) const { return k < ell.size() ? ell[k] : std::nullopt; }
  friend bool operator==(const neighborhood_profile&, const neighborhood_profile&) = default;
};

struct capacity_result {
  ratio a;
  ratio a_star;
  vertex_set witness;
  engine_kind engine = engine_kind::general;
  bool has_fpm = false;
  std::optional<neighborhood_profile> profile;
};

struct capacity_options {
  std::size_t threads = 1;
  limits lim = default_limits();
};

/// a* = a when a <= 1/2, else 1.
inline ratio a_star(const ratio& a) { return a <= ratio(1, 2) ? a : ratio(1); }

/// Fractional perfect matching exists iff the bipartite double cover G x K2
/// has a perfect matching.
inline bool has_fractional_perfect_matching(const graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  graph cover = categorical_product(g, gen::complete(2));
  std::vector<int> side(2 * n);
  for (std::size_t i = 0; i < side.size(); ++i) side[i] = static_cast<int>(i % 2);
  return maximum_bipartite_matching(cover, side).size == n;
}

namespace detail {

// Best (k, ell(k)) by k / (k + ell(k)); smallest k on ties.
inline std::pair<std::size_t, ratio> best_of_profile(const neighborhood_profile& p) {
  std::size_t best_k = 0;
  ratio best(0);
  for (std::size_t k = 1; k < p.ell.size(); ++k) {
    if (!p.ell[k]) continue;
    ratio r = independence_fraction(k, *p.ell[k]);
    if (best_k == 0 || r > best) {
      best = r;
      best_k = k;
    }
  }
  if (best_k == 0) throw internal_error("capacity: profile has no nonempty independent set");
  return {best_k, best};
}

inline capacity_result finish(const graph& g, ratio a, vertex_set witness, engine_kind e,
                              std::optional<neighborhood_profile> profile = std::nullopt) {
  if (!is_independent(g, witness) || witness.empty())
    throw internal_error(std::string(engine_name(e)) + ": witness is not a nonempty independent set");
  if (independence_fraction(witness.size(), neighborhood(g, witness).size()) != a)
    throw internal_error(std::string(engine_name(e)) + ": witness ratio differs from a");
  capacity_result r{a, a_star(a), std::move(witness), e, has_fractional_perfect_matching(g), std::move(profile)};
#ifndef NDEBUG
  if ((r.a_star == ratio(1)) == r.has_fpm)
    throw internal_error("capacity: a* = 1 disagrees with the fractional matching test");
#endif
  return r;
}

using profile_table = std::vector<std::optional<std::size_t>>;

inline void keep_min(std::optional<std::size_t>& slot, std::size_t v) {
  if (!slot || v < *slot) slot = v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cographs.

namespace detail {

struct cograph_dp {
  const cotree& t;
  std::vector<profile_table> table;
  // union: take[c][k] = amount taken from child c when folding children 0..c
  std::vector<std::vector<std::vector<std::size_t>>> take;
  // join: which child realises ell(k)
  std::vector<std::vector<std::size_t>> from;

  explicit cograph_dp(const cotree& tree)
      : t(tree), table(tree.node_count()), take(tree.node_count()), from(tree.node_count()) {
    for (std::size_t id = 0; id < t.node_count(); ++id) build(id);
  }

  void build(std::size_t id) {
    const auto& n = t.node(id);
    auto& out = table[id];
    if (n.kind == cotree_kind::leaf) {
      out = {0, 0};
      return;
    }
    if (n.kind == cotree_kind::union_node) {
      profile_table acc = table[n.children[0]];
      take[id].resize(n.children.size());
      for (std::size_t c = 1; c < n.children.size(); ++c) {
        const auto& add = table[n.children[c]];
        profile_table next(acc.size() + add.size() - 1);
        std::vector<std::size_t> split(next.size(), 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
          if (!acc[i]) continue;
          for (std::size_t j = 0; j < add.size(); ++j) {
            if (!add[j]) continue;
            std::size_t v = *acc[i] + *add[j];
            if (!next[i + j] || v < *next[i + j]) {
              next[i + j] = v;
              split[i + j] = j;
            }
          }
        }
        take[id][c] = std::move(split);
        acc = std::move(next);
      }
      out = std::move(acc);
      return;
    }
    // Join: a nonempty independent set stays inside one child and sees all
    // vertices of the other children.
    std::size_t longest = 0;
    for (auto c : n.children) longest = std::max(longest, table[c].size());
    out.assign(longest, std::nullopt);
    from[id].assign(longest, 0);
    out[0] = 0;
    for (std::size_t c = 0; c < n.children.size(); ++c) {
      const auto& child = table[n.children[c]];
      const std::size_t outside = n.leaf_count - t.node(n.children[c]).leaf_count;
      for (std::size_t k = 1; k < child.size(); ++k) {
        if (!child[k]) continue;
        std::size_t v = *child[k] + outside;
        if (!out[k] || v < *out[k]) {
          out[k] = v;
          from[id][k] = c;
        }
      }
    }
  }

  void witness(std::size_t id, std::size_t k, vertex_set& out) const {
    if (k == 0) return;
    const auto& n = t.node(id);
    if (n.kind == cotree_kind::leaf) {
      out.insert(n.leaf);
      return;
    }
    if (n.kind == cotree_kind::join_node) {
      witness(n.children[from[id][k]], k, out);
      return;
    }
    for (std::size_t c = n.children.size() - 1; c >= 1; --c) {
      std::size_t part = take[id][c][k];
      witness(n.children[c], part, out);
      k -= part;
    }
    witness(n.children[0], k, out);
  }
};

}  // namespace detail

inline neighborhood_profile cograph_profile(const cotree& t) {
  detail::cograph_dp dp(t);
  return {dp.table[t.root()]};
}

inline capacity_result a_cograph(const cotree& t) {
  detail::cograph_dp dp(t);
  neighborhood_profile p{dp.table[t.root()]};
  auto [k, a] = detail::best_of_profile(p);
  vertex_set w(t.vertex_count());
  dp.witness(t.root(), k, w);
  return detail::finish(t.realize(), a, std::move(w), engine_kind::cograph, std::move(p));
}

// ---------------------------------------------------------------------------
// Split graphs: a = max(a0, a1). a0 optimises over subsets of S through the
// min-ratio cut; a1 = (n - d)/n takes a minimum-degree clique vertex v together
// with S \ N(v).

inline capacity_result a_split(const graph& g, const split_partition& p) {
  require_split_partition(g, p);
  const std::size_t n = g.num_vertices();
  if (n == 0) throw input_error("a_split: empty graph");
  std::optional<std::pair<ratio, vertex_set>> a0, a1;
  if (!p.independent.empty()) {
    auto r = min_ratio_subset(g, p.independent);
    a0.emplace(independence_fraction(r.subset.size(), neighborhood(g, r.subset).size()), r.subset);
  }
  if (!p.clique.empty()) {
    vertex v = static_cast<vertex>(p.clique.first());
    p.clique.for_each([&](vertex c) {
      if (g.degree(c) < g.degree(v)) v = c;
    });
    vertex_set w = p.independent - g.row(v);
    w.insert(v);
    a1.emplace(ratio(static_cast<std::int64_t>(n - g.degree(v)), static_cast<std::int64_t>(n)), std::move(w));
  }
  auto& pick = (a0 && (!a1 || a0->first >= a1->first)) ? *a0 : *a1;
  return detail::finish(g, pick.first, std::move(pick.second), engine_kind::split);
}

// ---------------------------------------------------------------------------
// Interval and permutation graphs: chains of pairwise non-adjacent vertices in
// a left-to-right order. For a chain ending in y followed by x,
// N(I) and N(x) only overlap inside N(y), so
//   i(x, k) = min_y i(y, k-1) + |N(x) \ N(y)|,  i(x, 1) = |N(x)|.

namespace detail {

// order: vertices in processing order; before(y, x): y may precede x.
template <class Before>
capacity_result chain_dp(const graph& g, const std::vector<vertex>& order, Before before, engine_kind e) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw input_error(std::string(engine_name(e)) + ": empty model");
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  // best[x][k], pred[x][k] indexed by position in order.
  std::vector<std::vector<std::size_t>> best(n, std::vector<std::size_t>(n + 1, none));
  std::vector<std::vector<std::size_t>> pred(n, std::vector<std::size_t>(n + 1, none));
  for (std::size_t xi = 0; xi < n; ++xi) {
    vertex x = order[xi];
    best[xi][1] = g.degree(x);
    for (std::size_t yi = 0; yi < xi; ++yi) {
      vertex y = order[yi];
      if (!before(y, x)) continue;
      const std::size_t extra = (g.row(x) - g.row(y)).size();
      for (std::size_t k = 2; k <= n; ++k) {
        if (best[yi][k - 1] == none) continue;
        std::size_t v = best[yi][k - 1] + extra;
        if (best[xi][k] == none || v < best[xi][k]) {
          best[xi][k] = v;
          pred[xi][k] = yi;
        }
      }
    }
  }
  neighborhood_profile prof{profile_table(n + 1)};
  prof.ell[0] = 0;
  std::size_t top_x = 0, top_k = 0;
  ratio top(0);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t xi = 0; xi < n; ++xi) {
      if (best[xi][k] == none) continue;
      keep_min(prof.ell[k], best[xi][k]);
      ratio r = independence_fraction(k, best[xi][k]);
      if (top_k == 0 || r > top) {
        top = r;
        top_x = xi;
        top_k = k;
      }
    }
  while (!prof.ell.empty() && !prof.ell.back()) prof.ell.pop_back();
  vertex_set w(n);
  for (std::size_t xi = top_x, k = top_k; k > 0; xi = pred[xi][k], --k) w.insert(order[xi]);
  return finish(g, top, std::move(w), e, std::move(prof));
}

}  // namespace detail

inline capacity_result a_interval(const interval_model& model) {
  graph g = realize_interval(model);
  std::vector<vertex> order(model.size());
  std::iota(order.begin(), order.end(), vertex{0});
  const auto& iv = model.intervals;
  std::stable_sort(order.begin(), order.end(), [&](vertex a, vertex b) {
    return iv[a].right != iv[b].right ? iv[a].right < iv[b].right : iv[a].left < iv[b].left;
  });
  return detail::chain_dp(g, order, [&](vertex y, vertex x) { return iv[y].right < iv[x].left; },
                          engine_kind::interval);
}

inline capacity_result a_permutation(const permutation_model& model) {
  graph g = realize_permutation(model);
  std::vector<vertex> order(model.size());
  std::iota(order.begin(), order.end(), vertex{0});
  return detail::chain_dp(g, order, [&](vertex y, vertex x) { return model.left_of(y, x); },
                          engine_kind::permutation);
}

// ---------------------------------------------------------------------------
// Bounded treewidth. A table entry is a colouring of the bag (IN the set, NBR
// = has a processed neighbour in the set, FREE) plus the set size k; its value
// is the least number of processed NBR vertices. Processed neighbours of an
// introduced vertex all sit in the current bag.

namespace detail {

enum : std::uint64_t { tw_free = 0, tw_nbr = 1, tw_in = 2 };

struct tw_key {
  std::uint64_t code;  // 2 bits per bag position
  std::size_t k;
  friend auto operator<=>(const tw_key&, const tw_key&) = default;
};

struct tw_entry {
  std::size_t value;
  tw_key left;
  tw_key right;  // join only
};

class treewidth_dp {
 public:
  treewidth_dp(const graph& g, const nice_tree_decomposition& d) : g_(g), d_(d), tables_(d.nodes.size()) {
    if (d.width > 30) throw limit_exceeded("a_treewidth: width", d.width, 30);
    for (std::size_t id = 0; id < d.nodes.size(); ++id) build(id);
  }

  neighborhood_profile profile() const {
    neighborhood_profile p;
    for (const auto& [key, entry] : tables_[d_.root]) {
      if (p.ell.size() <= key.k) p.ell.resize(key.k + 1);
      keep_min(p.ell[key.k], entry.value);
    }
    return p;
  }

  vertex_set witness(std::size_t k) const {
    vertex_set out(g_.num_vertices());
    trace(d_.root, tw_key{0, k}, out);
    return out;
  }

 private:
  static std::uint64_t colour(std::uint64_t code, std::size_t pos) { return (code >> (2 * pos)) & 3U; }
  static std::uint64_t with(std::uint64_t code, std::size_t pos, std::uint64_t c) {
    return (code & ~(std::uint64_t{3} << (2 * pos))) | (c << (2 * pos));
  }
  // Insert / erase a digit at pos, shifting higher digits.
  static std::uint64_t insert_at(std::uint64_t code, std::size_t pos, std::uint64_t c) {
    std::uint64_t low = code & ((std::uint64_t{1} << (2 * pos)) - 1);
    std::uint64_t high = code >> (2 * pos);
    return low | (c << (2 * pos)) | (high << (2 * pos + 2));
  }
  static std::uint64_t erase_at(std::uint64_t code, std::size_t pos) {
    std::uint64_t low = code & ((std::uint64_t{1} << (2 * pos)) - 1);
    std::uint64_t high = code >> (2 * pos + 2);
    return low | (high << (2 * pos));
  }

  static void offer(std::map<tw_key, tw_entry>& t, tw_key key, tw_entry e) {
    auto [it, fresh] = t.try_emplace(key, e);
    if (!fresh && e.value < it->second.value) it->second = e;
  }

  void build(std::size_t id) {
    const auto& node = d_.nodes[id];
    auto& out = tables_[id];
    const auto& bag = node.bag;
    switch (node.kind) {
      case nice_kind::start: {
        const std::size_t b = bag.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
          bool ok = true;
          for (std::size_t i = 0; i < b && ok; ++i)
            for (std::size_t j = i + 1; j < b && ok; ++j)
              if ((mask >> i & 1U) && (mask >> j & 1U) && g_.adjacent(bag[i], bag[j])) ok = false;
          if (!ok) continue;
          std::uint64_t code = 0;
          std::size_t nbr = 0;
          for (std::size_t i = 0; i < b; ++i) {
            std::uint64_t c = tw_free;
            if (mask >> i & 1U) {
              c = tw_in;
            } else {
              for (std::size_t j = 0; j < b; ++j)
                if ((mask >> j & 1U) && g_.adjacent(bag[i], bag[j])) c = tw_nbr;
            }
            if (c == tw_nbr) ++nbr;
            code = with(code, i, c);
          }
          offer(out, {code, static_cast<std::size_t>(std::popcount(mask))}, {nbr, {}, {}});
        }
        break;
      }
      case nice_kind::introduce: {
        const auto& child = tables_[node.children[0]];
        const auto pos = static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), node.x) - bag.begin());
        for (const auto& [key, entry] : child) {
          std::uint64_t base = insert_at(key.code, pos, tw_free);
          bool in_neighbour = false;
          std::vector<std::size_t> free_neighbours;
          for (std::size_t i = 0; i < bag.size(); ++i) {
            if (i == pos || !g_.adjacent(bag[i], node.x)) continue;
            auto c = colour(base, i);
            if (c == tw_in) in_neighbour = true;
            if (c == tw_free) free_neighbours.push_back(i);
          }
          // x outside the set.
          offer(out, {with(base, pos, in_neighbour ? tw_nbr : tw_free), key.k},
                {entry.value + (in_neighbour ? 1 : 0), key, {}});
          // x in the set.
          if (!in_neighbour) {
            std::uint64_t code = with(base, pos, tw_in);
            for (auto i : free_neighbours) code = with(code, i, tw_nbr);
            offer(out, {code, key.k + 1}, {entry.value + free_neighbours.size(), key, {}});
          }
        }
        break;
      }
      case nice_kind::forget: {
        const auto& child_bag = d_.nodes[node.children[0]].bag;
        const auto pos =
            static_cast<std::size_t>(std::lower_bound(child_bag.begin(), child_bag.end(), node.x) - child_bag.begin());
        for (const auto& [key, entry] : tables_[node.children[0]])
          offer(out, {erase_at(key.code, pos), key.k}, {entry.value, key, {}});
        break;
      }
      case nice_kind::join: {
        const auto& left = tables_[node.children[0]];
        const auto& right = tables_[node.children[1]];
        // Group the right table by IN pattern.
        std::map<std::uint64_t, std::vector<std::pair<tw_key, tw_entry>>> by_in;
        for (const auto& [key, entry] : right) by_in[in_mask(key.code, bag.size())].emplace_back(key, entry);
        for (const auto& [lk, le] : left) {
          auto it = by_in.find(in_mask(lk.code, bag.size()));
          if (it == by_in.end()) continue;
          std::size_t in_count = 0;
          for (std::size_t i = 0; i < bag.size(); ++i) in_count += colour(lk.code, i) == tw_in;
          for (const auto& [rk, re] : it->second) {
            std::uint64_t code = 0;
            std::size_t both = 0;
            for (std::size_t i = 0; i < bag.size(); ++i) {
              auto a = colour(lk.code, i), b = colour(rk.code, i);
              if (a == tw_nbr && b == tw_nbr) ++both;
              code = with(code, i, a == tw_in ? tw_in : (a == tw_nbr || b == tw_nbr) ? tw_nbr : tw_free);
            }
            offer(out, {code, lk.k + rk.k - in_count}, {le.value + re.value - both, lk, rk});
          }
        }
        break;
      }
    }
  }

  static std::uint64_t in_mask(std::uint64_t code, std::size_t b) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < b; ++i)
      if (colour(code, i) == tw_in) m |= std::uint64_t{1} << i;
    return m;
  }

  void trace(std::size_t id, tw_key key, vertex_set& out) const {
    const auto& node = d_.nodes[id];
    const auto& entry = tables_[id].at(key);
    switch (node.kind) {
      case nice_kind::start:
        for (std::size_t i = 0; i < node.bag.size(); ++i)
          if (colour(key.code, i) == tw_in) out.insert(node.bag[i]);
        break;
      case nice_kind::introduce: {
        const auto pos = static_cast<std::size_t>(std::lower_bound(node.bag.begin(), node.bag.end(), node.x) -
                                                  node.bag.begin());
        if (colour(key.code, pos) == tw_in) out.insert(node.x);
        trace(node.children[0], entry.left, out);
        break;
      }
      case nice_kind::forget:
        trace(node.children[0], entry.left, out);
        break;
      case nice_kind::join:
        trace(node.children[0], entry.left, out);
        trace(node.children[1], entry.right, out);
        break;
    }
  }

  const graph& g_;
  const nice_tree_decomposition& d_;
  std::vector<std::map<tw_key, tw_entry>> tables_;
};

}  // namespace detail

inline neighborhood_profile treewidth_profile(const graph& g, const nice_tree_decomposition& d) {
  verify_nice(g, d);
  return detail::treewidth_dp(g, d).profile();
}

inline capacity_result a_treewidth(const graph& g, const nice_tree_decomposition& d) {
  if (g.empty()) throw input_error("a_treewidth: empty graph");
  verify_nice(g, d);
  detail::treewidth_dp dp(g, d);
  auto p = dp.profile();
  auto [k, a] = detail::best_of_profile(p);
  return detail::finish(g, a, dp.witness(k), engine_kind::treewidth, std::move(p));
}

// ---------------------------------------------------------------------------
// General graphs: every independent set lies in a maximal one, so
// a = max over maximal I of the best ratio inside I, found by a min-ratio cut.

namespace detail {

struct general_best {
  std::optional<ratio> value;
  vertex_set witness;

  void offer(const ratio& r, const vertex_set& w) {
    if (!value || r > *value || (r == *value && lex_less(w, witness))) {
      value = r;
      witness = w;
    }
  }
};

}  // namespace detail

inline capacity_result a_general_exact(const graph& g, const capacity_options& opt = {}) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw input_error("a_general_exact: empty graph");
  if (n > opt.lim.general_vertices) throw limit_exceeded("a_general_exact: vertex count", n, opt.lim.general_vertices);

  auto scan = [&g](std::size_t first, std::size_t last) {
    detail::general_best best;
    for_each_maximal_independent_set(
        g,
        [&](const vertex_set& s) {
          auto r = min_ratio_subset(g, s);
          best.offer(independence_fraction(r.subset.size(), neighborhood(g, r.subset).size()), r.subset);
        },
        first, last);
    return best;
  };

  detail::general_best best;
  const std::size_t branches = maximal_independent_set_root_branches(g);
  const std::size_t threads = std::max<std::size_t>(1, std::min(opt.threads, branches));
  if (threads == 1) {
    best = scan(0, branches);
  } else {
    std::vector<detail::general_best> parts(threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        parts[t] = scan(branches * t / threads, branches * (t + 1) / threads);
      });
    for (auto& th : pool) th.join();
    for (auto& p : parts)
      if (p.value) best.offer(*p.value, p.witness);
  }
  if (!best.value) throw internal_error("a_general_exact: no maximal independent set");
  return detail::finish(g, *best.value, std::move(best.witness), engine_kind::general);
}

/// The exhaustive oracle wrapped as a capacity result.
inline capacity_result a_brute(const graph& g, const limits& lim = default_limits()) {
  auto r = a_bruteforce(g, lim);
  return detail::finish(g, r.value, std::move(r.witness), engine_kind::brute);
}

// ---------------------------------------------------------------------------
// Dispatch.

/// A graph with any certificates the caller holds. Certificates must describe
/// exactly `g` (checked).
struct capacity_input {
  graph g;
  std::optional<cotree> cotree_cert;
  std::optional<split_partition> split_cert;
  std::optional<interval_model> interval_cert;
  std::optional<permutation_model> permutation_cert;
  std::optional<nice_tree_decomposition> decomposition_cert;
};

/// Certified inputs go to the cheapest class engine (cograph, split,
/// interval/permutation, treewidth). A bare graph is split into components,
/// each solved by the general engine, and combined by max: the best ratio of
/// a disjoint union is attained inside one component.
inline capacity_result tensor_capacity(const capacity_input& in, const capacity_options& opt = {}) {
  const graph& g = in.g;
  if (g.empty()) throw input_error("tensor_capacity: empty graph");
  auto same = [&](const graph& realised, const char* what) {
    if (!(realised == g)) throw input_error(std::string("tensor_capacity: ") + what + " does not describe the graph");
  };
  if (in.cotree_cert) {
    same(in.cotree_cert->realize(), "cotree");
    return a_cograph(*in.cotree_cert);
  }
  if (in.split_cert) return a_split(g, *in.split_cert);
  if (in.interval_cert) {
    same(realize_interval(*in.interval_cert), "interval model");
    return a_interval(*in.interval_cert);
  }
  if (in.permutation_cert) {
    same(realize_permutation(*in.permutation_cert), "permutation model");
    return a_permutation(*in.permutation_cert);
  }
  if (in.decomposition_cert) return a_treewidth(g, *in.decomposition_cert);

  auto parts = component_vertex_lists(g);
  if (parts.size() == 1) return a_general_exact(g, opt);
  std::optional<ratio> best;
  vertex_set witness(g.num_vertices());
  bool fpm = true;
  for (const auto& part : parts) {
    auto [sub, ids] = induced_subgraph(g, std::span<const vertex>(part));
    auto r = a_general_exact(sub, opt);
    fpm = fpm && r.has_fpm;
    if (!best || r.a > *best) {
      best = r.a;
      witness = vertex_set(g.num_vertices());
      r.witness.for_each([&](vertex v) { witness.insert(ids[v]); });
    }
  }
  auto r = detail::finish(g, *best, std::move(witness), engine_kind::general);
  if (r.has_fpm != fpm) throw internal_error("tensor_capacity: component matching flags disagree");
  return r;
}

inline capacity_result tensor_capacity(const graph& g, const capacity_options& opt = {}) {
  return tensor_capacity(capacity_input{g, {}, {}, {}, {}, {}}, opt);
}

}  // namespace il
