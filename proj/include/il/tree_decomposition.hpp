#pragma once

// Tree decompositions: validation against a graph, conversion to nice form
// (start / introduce / forget / join nodes, empty root bag), and an exhaustive
// elimination-order finder for small graphs.

#include "il/config.hpp"
#include "il/error.hpp"
#include "il/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace il {

/// Arbitrary-arity decomposition: bags plus undirected tree edges between bag ids.
struct tree_decomposition {
  std::vector<std::vector<vertex>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  std::size_t width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return w == 0 ? 0 : w - 1;
  }
};

enum class nice_kind { start, introduce, forget, join };

struct nice_node {
  nice_kind kind = nice_kind::start;
  std::vector<vertex> bag;             // sorted
  vertex x = 0;                        // introduced / forgotten vertex
  std::vector<std::size_t> children;  // 0 (start), 1 (introduce/forget) or 2 (join)
};

/// Nodes are stored children-first; the root is the last node.
struct nice_tree_decomposition {
  std::vector<nice_node> nodes;
  std::size_t root = 0;
  std::size_t width = 0;
};

namespace detail {

inline std::string vertex_pair(vertex u, vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

// For each vertex: number of tree nodes holding it minus number of tree edges
// with both ends holding it; the holders form a subtree iff this equals 1.
inline void check_axioms(const graph& g, const std::vector<std::vector<vertex>>& bags,
                         const std::vector<std::pair<std::size_t, std::size_t>>& tree_edges) {
  const std::size_t n = g.num_vertices();
  std::vector<vertex_set> holds;
  holds.reserve(bags.size());
  for (const auto& b : bags) holds.push_back(vertex_set::of(n, b));
  std::vector<std::size_t> node_count(n, 0), edge_count(n, 0);
  for (const auto& h : holds) h.for_each([&](vertex v) { ++node_count[v]; });
  for (auto [a, b] : tree_edges) (holds[a] & holds[b]).for_each([&](vertex v) { ++edge_count[v]; });
  for (vertex v = 0; v < n; ++v) {
    if (node_count[v] == 0)
      throw invalid_decomposition("vertex coverage violated: vertex " + std::to_string(v) + " is in no bag");
  }
  for (auto [u, v] : g.edges()) {
    bool covered = std::any_of(holds.begin(), holds.end(),
                               [&](const vertex_set& h) { return h.contains(u) && h.contains(v); });
    if (!covered) throw invalid_decomposition("edge coverage violated: edge " + vertex_pair(u, v) + " is in no bag");
  }
  for (vertex v = 0; v < n; ++v) {
    if (node_count[v] - edge_count[v] != 1)
      throw invalid_decomposition("connectivity violated: bags containing vertex " + std::to_string(v) +
                                  " are disconnected");
  }
}

}  // namespace detail

/// Checks the three decomposition axioms (and that the bag graph is a tree).
/// Throws invalid_decomposition naming the violated axiom and its witness.
inline tree_decomposition validate_decomposition(const graph& g, tree_decomposition td) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = td.bags.size();
  if (k == 0) {
    if (n == 0) return td;
    throw invalid_decomposition("decomposition has no bags");
  }
  for (auto& b : td.bags) {
    for (auto v : b)
      if (v >= n) throw invalid_decomposition("bag vertex " + std::to_string(v) + " out of range");
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  if (td.tree_edges.size() != k - 1)
    throw invalid_decomposition("decomposition tree must have exactly #bags-1 edges");
  std::vector<std::vector<std::size_t>> adj(k);
  for (auto [a, b] : td.tree_edges) {
    if (a >= k || b >= k || a == b) throw invalid_decomposition("bad tree edge between bags");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (auto b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        ++reached;
        stack.push_back(b);
      }
  }
  if (reached != k) throw invalid_decomposition("decomposition tree is not connected");
  detail::check_axioms(g, td.bags, td.tree_edges);
  return td;
}

/// Re-checks a nice decomposition: node shapes, empty root, and the axioms.
inline void verify_nice(const graph& g, const nice_tree_decomposition& d) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<vertex>> bags;
  std::size_t max_bag = 0;
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& node = d.nodes[id];
    bags.push_back(node.bag);
    max_bag = std::max(max_bag, node.bag.size());
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) throw invalid_decomposition("nice: unsorted bag");
    for (auto c : node.children) {
      if (c >= id) throw invalid_decomposition("nice: child stored after parent");
      edges.emplace_back(id, c);
    }
    auto with = [](std::vector<vertex> b, vertex x) {
      b.insert(std::upper_bound(b.begin(), b.end(), x), x);
      return b;
    };
    switch (node.kind) {
      case nice_kind::start:
        if (!node.children.empty()) throw invalid_decomposition("nice: start node with children");
        break;
      case nice_kind::introduce:
        if (node.children.size() != 1 || std::binary_search(d.nodes[node.children[0]].bag.begin(),
                                                            d.nodes[node.children[0]].bag.end(), node.x) ||
            with(d.nodes[node.children[0]].bag, node.x) != node.bag)
          throw invalid_decomposition("nice: malformed introduce node");
        break;
      case nice_kind::forget:
        if (node.children.size() != 1 || std::binary_search(node.bag.begin(), node.bag.end(), node.x) ||
            with(node.bag, node.x) != d.nodes[node.children[0]].bag)
          throw invalid_decomposition("nice: malformed forget node");
        break;
      case nice_kind::join:
        if (node.children.size() != 2 || d.nodes[node.children[0]].bag != node.bag ||
            d.nodes[node.children[1]].bag != node.bag)
          throw invalid_decomposition("nice: malformed join node");
        break;
    }
  }
  if (d.nodes.empty()) {
    if (g.num_vertices() == 0) return;
    throw invalid_decomposition("nice: no nodes");
  }
  if (d.root != d.nodes.size() - 1 || !d.nodes[d.root].bag.empty())
    throw invalid_decomposition("nice: root must be last and have an empty bag");
  if (edges.size() != d.nodes.size() - 1) throw invalid_decomposition("nice: not a tree");
  if ((max_bag == 0 ? 0 : max_bag - 1) != d.width) throw invalid_decomposition("nice: width mismatch");
  detail::check_axioms(g, bags, edges);
}

/// Validates td against g, then expands it into nice form rooted at bag 0:
/// forget/introduce paths along tree edges, binary joins, start nodes with
/// empty bags, and a final chain of forgets down to an empty root.
inline nice_tree_decomposition validate_and_nicify(const graph& g, tree_decomposition raw) {
  tree_decomposition td = validate_decomposition(g, std::move(raw));
  nice_tree_decomposition out;
  out.width = td.width();
  if (td.bags.empty()) {
    out.nodes.push_back({nice_kind::start, {}, 0, {}});
    return out;
  }
  const std::size_t k = td.bags.size();
  std::vector<std::vector<std::size_t>> adj(k);
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  auto add = [&](nice_node n) {
    out.nodes.push_back(std::move(n));
    return out.nodes.size() - 1;
  };
  auto move_to = [&](std::size_t id, const std::vector<vertex>& target) {
    std::vector<vertex> bag = out.nodes[id].bag;
    for (vertex v : std::vector<vertex>(bag)) {
      if (std::binary_search(target.begin(), target.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      id = add({nice_kind::forget, bag, v, {id}});
    }
    for (vertex v : target) {
      if (std::binary_search(bag.begin(), bag.end(), v)) continue;
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      id = add({nice_kind::introduce, bag, v, {id}});
    }
    return id;
  };

  auto build = [&](auto&& self, std::size_t t, std::size_t parent) -> std::size_t {
    std::vector<std::size_t> tops;
    for (auto c : adj[t]) {
      if (c == parent) continue;
      tops.push_back(move_to(self(self, c, t), td.bags[t]));
    }
    if (tops.empty()) return move_to(add({nice_kind::start, {}, 0, {}}), td.bags[t]);
    std::size_t top = tops.front();
    for (std::size_t i = 1; i < tops.size(); ++i) top = add({nice_kind::join, td.bags[t], 0, {top, tops[i]}});
    return top;
  };
  std::size_t top = build(build, 0, static_cast<std::size_t>(-1));
  out.root = move_to(top, {});
  verify_nice(g, out);
  return out;
}

/// Minimum-width decomposition by dynamic programming over elimination
/// prefixes, O*(2^n). Intended for small graphs (test plumbing and checks).
inline tree_decomposition exact_tree_decomposition(const graph& g, const limits& lim = default_limits()) {
  const std::size_t n = g.num_vertices();
  if (n > lim.exact_treewidth_vertices || n > 25)
    throw limit_exceeded("exact_tree_decomposition: vertex count", n, std::min<std::size_t>(lim.exact_treewidth_vertices, 25));
  tree_decomposition td;
  if (n == 0) return td;
  std::vector<std::uint32_t> adj(n, 0);
  for (vertex v = 0; v < n; ++v)
    for (vertex u : g.neighbors(v)) adj[v] |= 1U << u;
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  // |Q(S, v)|: vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, vertex v) {
    std::uint32_t reach = 1U << v, frontier = 1U << v, out = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<vertex>(std::countr_zero(f))];
      next &= ~reach;
      reach |= next;
      out |= next & ~s;
      frontier = next & s;
    }
    return static_cast<std::size_t>(std::popcount(out));
  };
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint8_t> tw(states, std::numeric_limits<std::uint8_t>::max());
  std::vector<std::uint8_t> last(states, 0);
  tw[0] = 0;
  for (std::uint32_t s = 1; s < states; ++s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      auto v = static_cast<vertex>(std::countr_zero(rest));
      std::uint32_t prev = s & ~(1U << v);
      auto value = static_cast<std::uint8_t>(std::max<std::size_t>(tw[prev], q_size(prev, v)));
      if (value < tw[s]) {
        tw[s] = value;
        last[s] = static_cast<std::uint8_t>(v);
      }
    }
  }
  std::vector<vertex> order(n);
  for (std::uint32_t s = full, i = static_cast<std::uint32_t>(n); s; s &= ~(1U << last[s])) order[--i] = last[s];

  // Eliminate in order, building bags from the filled graph.
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::uint32_t> filled = adj;
  std::uint32_t alive = full;
  td.bags.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    vertex v = order[i];
    std::uint32_t nb = filled[v] & alive & ~(1U << v);
    td.bags[i].push_back(v);
    for (std::uint32_t f = nb; f; f &= f - 1) td.bags[i].push_back(static_cast<vertex>(std::countr_zero(f)));
    std::sort(td.bags[i].begin(), td.bags[i].end());
    for (std::uint32_t f = nb; f; f &= f - 1) filled[static_cast<vertex>(std::countr_zero(f))] |= nb;
    alive &= ~(1U << v);
    if (i + 1 < n) {
      std::size_t parent = i + 1;
      if (nb) {
        parent = n;
        for (std::uint32_t f = nb; f; f &= f - 1)
          parent = std::min(parent, position[static_cast<vertex>(std::countr_zero(f))]);
      }
      td.tree_edges.emplace_back(i, parent);
    }
  }
  return td;
}

}  // namespace il
