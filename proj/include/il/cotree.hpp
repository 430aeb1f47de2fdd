#pragma once

// Cotrees: union/join decomposition trees of cographs (P4-free graphs).
//
// Canonical form: no internal node shares its parent's label, every internal
// node has at least two children, and children are ordered by least leaf id.
// Nodes are stored in post-order, so node ids are stable and children always
// precede their parent; the root is the last node.

#include "il/error.hpp"
#include "il/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace il {

enum class cotree_kind { leaf, union_node, join_node };

/// Tree-shaped input form (parser and builder output). Not yet validated.
struct cotree_expr {
  cotree_kind kind = cotree_kind::leaf;
  vertex leaf = 0;
  std::vector<cotree_expr> children;

  static cotree_expr make_leaf(vertex v) { return {cotree_kind::leaf, v, {}}; }
  static cotree_expr make_union(std::vector<cotree_expr> c) { return {cotree_kind::union_node, 0, std::move(c)}; }
  static cotree_expr make_join(std::vector<cotree_expr> c) { return {cotree_kind::join_node, 0, std::move(c)}; }
};

struct cotree_node {
  cotree_kind kind = cotree_kind::leaf;
  vertex leaf = 0;                      // leaves only
  std::vector<std::size_t> children;    // node ids
  std::size_t leaf_count = 0;
  vertex least_leaf = 0;
};

class cotree {
 public:
  /// Validates (internal nodes need >= 2 children; leaf ids must be exactly
  /// 0..n-1) and canonicalises.
  static cotree from_expr(const cotree_expr& e) {
    cotree_expr c = canonical(e);
    cotree t;
    t.root_ = t.append(c);
    std::vector<bool> seen(t.nodes_.size(), false);
    std::size_t leaves = 0;
    for (const auto& n : t.nodes_) {
      if (n.kind != cotree_kind::leaf) continue;
      ++leaves;
      if (n.leaf >= seen.size() || seen[n.leaf])
        throw input_error("cotree: leaf ids must be distinct and dense 0..n-1 (leaf " +
                          std::to_string(n.leaf) + ")");
      seen[n.leaf] = true;
    }
    t.vertex_count_ = leaves;
    for (vertex v = 0; v < leaves; ++v)
      if (!seen[v]) throw input_error("cotree: leaf ids must be dense 0..n-1 (missing " + std::to_string(v) + ")");
    return t;
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t root() const noexcept { return root_; }
  const cotree_node& node(std::size_t id) const { return nodes_.at(id); }
  const std::vector<cotree_node>& nodes() const noexcept { return nodes_; }

  /// Leaf vertex ids below a node, ascending.
  std::vector<vertex> leaves_of(std::size_t id) const {
    std::vector<vertex> out;
    collect(id, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  graph realize() const {
    std::vector<edge> e;
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      const auto& n = nodes_[id];
      if (n.kind != cotree_kind::join_node) continue;
      std::vector<std::vector<vertex>> parts;
      for (auto c : n.children) parts.push_back(leaves_of(c));
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          for (vertex a : parts[i])
            for (vertex b : parts[j]) e.emplace_back(a, b);
    }
    return graph(vertex_count_, e);
  }

  /// "+" = union, "*" = join, e.g. "(* (+ 0 1) 2)".
  std::string to_sexpr() const { return sexpr(root_); }

  cotree_expr to_expr() const { return expr(root_); }

  friend bool operator==(const cotree& a, const cotree& b) { return a.to_sexpr() == b.to_sexpr(); }

 private:
  static cotree_expr canonical(const cotree_expr& e) {
    if (e.kind == cotree_kind::leaf) {
      if (!e.children.empty()) throw input_error("cotree: leaf with children");
      return e;
    }
    if (e.children.size() < 2) throw input_error("cotree: internal node needs at least two children");
    cotree_expr out{e.kind, 0, {}};
    for (const auto& child : e.children) {
      cotree_expr c = canonical(child);
      if (c.kind == e.kind) {
        for (auto& grand : c.children) out.children.push_back(std::move(grand));
      } else {
        out.children.push_back(std::move(c));
      }
    }
    std::sort(out.children.begin(), out.children.end(),
              [](const cotree_expr& a, const cotree_expr& b) { return least(a) < least(b); });
    return out;
  }

  static vertex least(const cotree_expr& e) {
    if (e.kind == cotree_kind::leaf) return e.leaf;
    vertex m = static_cast<vertex>(-1);
    for (const auto& c : e.children) m = std::min(m, least(c));
    return m;
  }

  std::size_t append(const cotree_expr& e) {
    cotree_node n;
    n.kind = e.kind;
    if (e.kind == cotree_kind::leaf) {
      n.leaf = e.leaf;
      n.leaf_count = 1;
      n.least_leaf = e.leaf;
    } else {
      n.least_leaf = static_cast<vertex>(-1);
      for (const auto& c : e.children) {
        auto id = append(c);
        n.children.push_back(id);
        n.leaf_count += nodes_[id].leaf_count;
        n.least_leaf = std::min(n.least_leaf, nodes_[id].least_leaf);
      }
    }
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
  }

  void collect(std::size_t id, std::vector<vertex>& out) const {
    const auto& n = nodes_[id];
    if (n.kind == cotree_kind::leaf) {
      out.push_back(n.leaf);
      return;
    }
    for (auto c : n.children) collect(c, out);
  }

  std::string sexpr(std::size_t id) const {
    const auto& n = nodes_[id];
    if (n.kind == cotree_kind::leaf) return std::to_string(n.leaf);
    std::string s = n.kind == cotree_kind::union_node ? "(+" : "(*";
    for (auto c : n.children) s += " " + sexpr(c);
    return s + ")";
  }

  cotree_expr expr(std::size_t id) const {
    const auto& n = nodes_[id];
    if (n.kind == cotree_kind::leaf) return cotree_expr::make_leaf(n.leaf);
    cotree_expr e{n.kind, 0, {}};
    for (auto c : n.children) e.children.push_back(expr(c));
    return e;
  }

  std::vector<cotree_node> nodes_;
  std::size_t root_ = 0;
  std::size_t vertex_count_ = 0;
};

namespace detail {

// Components of G[X] (complemented = false) or of its complement, each sorted,
// ordered by least member.
inline std::vector<std::vector<vertex>> induced_components(const graph& g, const std::vector<vertex>& x,
                                                           bool complemented) {
  vertex_set unvisited = vertex_set::of(g.num_vertices(), x);
  std::vector<std::vector<vertex>> out;
  std::vector<vertex> stack;
  for (vertex s : x) {
    if (!unvisited.contains(s)) continue;
    unvisited.erase(s);
    std::vector<vertex> comp{s};
    stack.push_back(s);
    while (!stack.empty()) {
      vertex u = stack.back();
      stack.pop_back();
      vertex_set next = complemented ? unvisited - g.row(u) : unvisited & g.row(u);
      next.for_each([&](vertex v) {
        unvisited.erase(v);
        comp.push_back(v);
        stack.push_back(v);
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Induced path a-b-c-d inside X; exists whenever G[X] and its complement are
// both connected and |X| >= 2.
inline std::array<vertex, 4> find_p4(const graph& g, const std::vector<vertex>& x) {
  vertex_set xs = vertex_set::of(g.num_vertices(), x);
  for (vertex b : x) {
    for (vertex c : g.neighbors(b)) {
      if (!xs.contains(c)) continue;
      vertex_set a_side = (g.row(b) & xs) - g.row(c);
      a_side.erase(c);
      vertex_set d_side = (g.row(c) & xs) - g.row(b);
      d_side.erase(b);
      if (a_side.empty() || d_side.empty()) continue;
      for (vertex a : a_side.members()) {
        vertex_set free_d = d_side - g.row(a);
        if (!free_d.empty()) return {a, b, c, static_cast<vertex>(free_d.first())};
      }
    }
  }
  throw internal_error("cograph_recognize: expected an induced P4");
}

inline cotree_expr recognize(const graph& g, const std::vector<vertex>& x) {
  if (x.size() == 1) return cotree_expr::make_leaf(x.front());
  auto parts = induced_components(g, x, false);
  if (parts.size() > 1) {
    std::vector<cotree_expr> c;
    for (const auto& p : parts) c.push_back(recognize(g, p));
    return cotree_expr::make_union(std::move(c));
  }
  parts = induced_components(g, x, true);
  if (parts.size() > 1) {
    std::vector<cotree_expr> c;
    for (const auto& p : parts) c.push_back(recognize(g, p));
    return cotree_expr::make_join(std::move(c));
  }
  throw not_a_cograph(find_p4(g, x));
}

}  // namespace detail

/// Canonical cotree of g, or not_a_cograph carrying an induced P4.
/// Recursive complement-components method, O(n^3 / 64) with bitset rows.
inline cotree cograph_recognize(const graph& g) {
  if (g.empty()) throw input_error("cograph_recognize: empty graph");
  std::vector<vertex> all(g.num_vertices());
  for (vertex v = 0; v < all.size(); ++v) all[v] = v;
  return cotree::from_expr(detail::recognize(g, all));
}

inline bool is_cograph(const graph& g) {
  try {
    cograph_recognize(g);
    return true;
  } catch (const not_a_cograph&) {
    return false;
  }
}

}  // namespace il
