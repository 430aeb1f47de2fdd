#pragma once

// Independent domination ratios r_i(G) = i(G) / |V(G)| of categorical powers.

#include "il/config.hpp"
#include "il/oracles.hpp"
#include "il/product.hpp"
#include "il/ratio.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace il {

/// r_i of the k-th power of K(m,n). The power splits into
/// C(k-1, l) copies of K(m^(k-l) n^l, m^l n^(k-l)) for l = 0..k-1, and
/// a complete bipartite component is dominated by its smaller side, so
///   r_i = sum_l C(k-1, l) min(m^(k-l) n^l, m^l n^(k-l)) / (m+n)^k.
inline big_ratio ri_complete_bipartite_power(std::size_t m, std::size_t n, std::size_t k) {
  if (m == 0 || n == 0 || k == 0) throw input_error("ri_complete_bipartite_power: m, n, k must be positive");
  auto power = [](std::size_t base, std::size_t e) {
    big_int r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
  };
  big_int sum = 0;
  big_int binom = 1;  // C(k-1, l)
  for (std::size_t l = 0; l < k; ++l) {
    big_int a = power(m, k - l) * power(n, l);
    big_int b = power(m, l) * power(n, k - l);
    sum += binom * (a < b ? a : b);
    binom = binom * (k - 1 - l) / (l + 1);
  }
  return big_ratio(sum, power(m + n, k));
}

/// Limit of r_i(G^k) for complete multipartite G (at least two classes):
/// 1/2 for two equal classes, 0 otherwise.
inline ratio ultimate_independent_domination_multipartite(std::span<const std::size_t> sizes) {
  if (sizes.size() < 2)
    throw input_error("ultimate_independent_domination_multipartite: need at least two classes (no isolated vertices)");
  if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; }))
    throw input_error("ultimate_independent_domination_multipartite: class sizes must be positive");
  if (sizes.size() == 2 && sizes[0] == sizes[1]) return ratio(1, 2);
  return ratio(0);
}

inline ratio ultimate_independent_domination_multipartite(std::initializer_list<std::size_t> sizes) {
  return ultimate_independent_domination_multipartite(std::span<const std::size_t>(sizes.begin(), sizes.size()));
}

/// i(G^k) / |V(G)|^k by exhaustive search on the explicit power.
inline ratio ri_power_exact(const graph& g, std::size_t k, const limits& lim = default_limits()) {
  if (g.empty()) throw input_error("ri_power_exact: empty graph");
  if (k == 0) throw input_error("ri_power_exact: k must be positive");
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (size > lim.domination_vertices) break;
    size *= g.num_vertices();
  }
  if (size > lim.domination_vertices) throw limit_exceeded("ri_power_exact: vertex count", size, lim.domination_vertices);
  graph p = graph_power(g, k, lim);
  auto d = independent_domination_exact(p, lim);
  return ratio(static_cast<std::int64_t>(d.size), static_cast<std::int64_t>(p.num_vertices()));
}

}  // namespace il
