#pragma once

// Integer max-flow (Dinic) with the inclusion-wise maximal minimum cut.

#include "il/bitset.hpp"
#include "il/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace il {

using capacity = std::int64_t;

class flow_network {
 public:
  /// Declared-unbounded arc capacity.
  static constexpr capacity infinite = std::numeric_limits<capacity>::max() / 4;

  struct arc {
    std::size_t to;
    std::size_t rev;  // index of the paired arc in adj[to]
    capacity cap;     // residual capacity
    capacity original;
  };

  flow_network(std::size_t nodes, std::size_t source, std::size_t sink)
      : adj_(nodes), source_(source), sink_(sink) {
    if (source >= nodes || sink >= nodes || source == sink)
      throw input_error("flow_network: bad source/sink");
  }

  void add_arc(std::size_t from, std::size_t to, capacity cap) {
    if (from >= adj_.size() || to >= adj_.size()) throw input_error("flow_network: node out of range");
    if (cap < 0) throw input_error("flow_network: negative capacity");
    if (to == source_) throw input_error("flow_network: arc into source");
    if (from == sink_) throw input_error("flow_network: arc out of sink");
    cap = std::min(cap, infinite);
    adj_[from].push_back({to, adj_[to].size(), cap, cap});
    adj_[to].push_back({from, adj_[from].size() - 1, 0, 0});
  }

  std::size_t node_count() const noexcept { return adj_.size(); }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }
  const std::vector<std::vector<arc>>& arcs() const noexcept { return adj_; }

 private:
  friend struct flow_solver;
  std::vector<std::vector<arc>> adj_;
  std::size_t source_;
  std::size_t sink_;
};

struct cut_result {
  capacity value = 0;
  std::vector<bool> source_side;  // per node

  std::size_t source_side_size() const {
    return static_cast<std::size_t>(std::count(source_side.begin(), source_side.end(), true));
  }
};

struct flow_result {
  capacity value = 0;
  cut_result cut;
};

struct flow_solver {
  explicit flow_solver(flow_network net) : net_(std::move(net)), level_(net_.node_count()), it_(net_.node_count()) {}

  flow_result run() {
    const std::size_t s = net_.source_, t = net_.sink_;
    capacity total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (capacity pushed = dfs(s, t, flow_network::infinite)) {
        total += pushed;
        if (total >= flow_network::infinite) throw input_error("max_flow: no finite cut");
      }
    }
    flow_result r;
    r.value = total;
    r.cut = maximal_cut();
    capacity crossing = 0;
    for (std::size_t u = 0; u < net_.node_count(); ++u) {
      if (!r.cut.source_side[u]) continue;
      for (const auto& a : net_.adj_[u])
        if (!r.cut.source_side[a.to]) crossing += a.original;
    }
    r.cut.value = crossing;
    if (crossing != total) throw internal_error("max_flow: cut value differs from flow value");
    return r;
  }

 private:
  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (const auto& a : net_.adj_[u]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  capacity dfs(std::size_t u, std::size_t t, capacity limit) {
    if (u == t) return limit;
    for (auto& i = it_[u]; i < net_.adj_[u].size(); ++i) {
      auto& a = net_.adj_[u][i];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      capacity got = dfs(a.to, t, std::min(limit, a.cap));
      if (got > 0) {
        a.cap -= got;
        net_.adj_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  // Source side = nodes that cannot reach t in the residual graph.
  cut_result maximal_cut() const {
    const std::size_t n = net_.node_count();
    std::vector<bool> reaches_t(n, false);
    std::vector<std::size_t> stack{net_.sink_};
    reaches_t[net_.sink_] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      // u reaches v if the arc u->v has residual capacity; arcs into v are the
      // reverses of v's arcs.
      for (const auto& back : net_.adj_[v]) {
        const auto& forward = net_.adj_[back.to][back.rev];
        if (forward.cap > 0 && !reaches_t[back.to]) {
          reaches_t[back.to] = true;
          stack.push_back(back.to);
        }
      }
    }
    if (reaches_t[net_.source_]) throw internal_error("max_flow: source still reaches sink");
    cut_result c;
    c.source_side.resize(n);
    for (std::size_t v = 0; v < n; ++v) c.source_side[v] = !reaches_t[v];
    return c;
  }

  flow_network net_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

/// Exact integer maximum flow. The returned cut has the inclusion-wise maximal
/// source side among all minimum cuts.
inline flow_result max_flow(flow_network net) { return flow_solver(std::move(net)).run(); }

}  // namespace il
