#include "support/catalog.hpp"

#include <gtest/gtest.h>

#include <iostream>
#include <map>

using namespace il;

namespace {

big_ratio to_big(const ratio& r) { return big_ratio(big_int(r.num()), big_int(r.den())); }

// Component inventory of an explicit graph whose components are complete
// bipartite: (smaller side, larger side) -> count.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> bipartite_components(const graph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  auto colour = two_coloring(g);
  EXPECT_TRUE(colour.has_value());
  for (const auto& part : component_vertex_lists(g)) {
    std::size_t a = 0, b = 0;
    for (vertex v : part) ((*colour)[v] == 0 ? a : b) += 1;
    EXPECT_EQ(induced_subgraph(g, std::span<const vertex>(part)).first.num_edges(), a * b);
    ++out[{std::min(a, b), std::max(a, b)}];
  }
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST(BipartitePower, Examples) {
  EXPECT_EQ(ri_complete_bipartite_power(1, 2, 1), big_ratio(1, 3));
  EXPECT_EQ(ri_complete_bipartite_power(1, 2, 2), big_ratio(1, 3));
  EXPECT_EQ(ri_complete_bipartite_power(1, 2, 3), big_ratio(7, 27));
  EXPECT_THROW(ri_complete_bipartite_power(0, 2, 1), input_error);
  EXPECT_THROW(ri_complete_bipartite_power(1, 2, 0), input_error);
}

TEST(BipartitePower, BalancedIsOneHalf) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(ri_complete_bipartite_power(m, m, k), big_ratio(1, 2));
}

TEST(BipartitePower, MatchesBruteForceWhereFeasible) {
  std::size_t checked = 0;
  for (std::size_t m = 1; m <= 19; ++m)
    for (std::size_t n = m; m + n <= 20; ++n)
      for (std::size_t k = 1; ipow(m + n, k) <= 20; ++k) {
        ratio brute = ri_power_exact(gen::complete_bipartite(m, n), k);
        ASSERT_EQ(ri_complete_bipartite_power(m, n, k), to_big(brute)) << m << " " << n << " " << k;
        ASSERT_EQ(ri_complete_bipartite_power(n, m, k), to_big(brute));
        ++checked;
      }
  EXPECT_GT(checked, 90U);
}

TEST(BipartitePower, NonIncreasingInK) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t k = 1; k < 12; ++k)
        ASSERT_LE(ri_complete_bipartite_power(m, n, k + 1), ri_complete_bipartite_power(m, n, k));
}

TEST(BipartitePower, UnbalancedDecaysBelowOneTenth) {
  // Consecutive values can tie (k = 3 and k = 4 both give 7/27), so the strict
  // decrease is checked two steps apart.
  std::optional<std::size_t> reached;
  for (std::size_t k = 1; k <= 30; ++k) {
    auto r = ri_complete_bipartite_power(1, 2, k);
    if (k > 1) ASSERT_LE(r, ri_complete_bipartite_power(1, 2, k - 1));
    if (k > 2) ASSERT_LT(r, ri_complete_bipartite_power(1, 2, k - 2));
    if (!reached && r < big_ratio(1, 10)) reached = k;
  }
  ASSERT_TRUE(reached.has_value());
  EXPECT_EQ(ri_complete_bipartite_power(1, 2, 4), big_ratio(7, 27));
}

TEST(BipartitePower, LargeKStaysExact) {
  auto r = ri_complete_bipartite_power(3, 5, 40);
  EXPECT_LT(r, big_ratio(1, 10));
  EXPECT_GT(r, big_ratio(1, 100));
  EXPECT_EQ(ri_complete_bipartite_power(7, 7, 60), big_ratio(1, 2));
}

TEST(BipartitePower, ComponentDecompositionOfThePower) {
  // K(m,n)^k is the disjoint union of C(k-1,l) copies of
  // K(m^(k-l) n^l, m^l n^(k-l)), l = 0..k-1.
  for (std::size_t k = 2; k <= 3; ++k)
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 1; n <= 3; ++n) {
        auto found = bipartite_components(graph_power(gen::complete_bipartite(m, n), k));
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> expected;
        for (std::size_t l = 0; l < k; ++l) {
          std::size_t a = ipow(m, k - l) * ipow(n, l);
          std::size_t b = ipow(m, l) * ipow(n, k - l);
          expected[{std::min(a, b), std::max(a, b)}] += binomial(k - 1, l);
        }
        ASSERT_EQ(found, expected) << m << " " << n << " " << k;
      }
}

TEST(Classification, TableOfSizeLists) {
  EXPECT_EQ(ultimate_independent_domination_multipartite({3, 3}), ratio(1, 2));
  EXPECT_EQ(ultimate_independent_domination_multipartite({1, 2}), ratio(0));
  EXPECT_EQ(ultimate_independent_domination_multipartite({1, 1, 1}), ratio(0));
  for (const auto& sizes : test::compositions_up_to(16)) {
    if (sizes.size() > 4 || std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 4; }))
      continue;
    if (sizes.size() < 2) {
      EXPECT_THROW(ultimate_independent_domination_multipartite(sizes), input_error);
      continue;
    }
    ratio expected = sizes.size() == 2 && sizes[0] == sizes[1] ? ratio(1, 2) : ratio(0);
    ASSERT_EQ(ultimate_independent_domination_multipartite(sizes), expected);
  }
}

TEST(PowerExact, Examples) {
  EXPECT_EQ(ri_power_exact(gen::complete(2), 2), ratio(1, 2));
  EXPECT_EQ(ri_power_exact(gen::complete_bipartite(1, 2), 1), ratio(1, 3));
  EXPECT_EQ(ri_power_exact(gen::complete(2), 1), ratio(1, 2));
  EXPECT_THROW(ri_power_exact(gen::cycle(5), 2), limit_exceeded);
  EXPECT_THROW(ri_power_exact(gen::cycle(5), 0), input_error);
}

TEST(ProductDomination, UpperBoundAndConjecturedLowerBound) {
  std::vector<graph> graphs;
  for (const auto& g : test::graphs_up_to(5))
    if (!test::has_isolated_vertex(g)) graphs.push_back(g);
  limits lim = limits::unbounded();
  std::vector<std::size_t> i_of;
  for (const auto& g : graphs) i_of.push_back(independent_domination_exact(g, lim).size);
  std::size_t counterexamples = 0;
  for (std::size_t a = 0; a < graphs.size(); ++a)
    for (std::size_t b = 0; b < graphs.size(); ++b) {
      std::size_t i_prod = independent_domination_exact(categorical_product(graphs[a], graphs[b]), lim).size;
      ASSERT_LE(i_prod, i_of[a] * graphs[b].num_vertices());
      if (i_prod < i_of[a] * i_of[b]) {
        ++counterexamples;
        std::cout << "counterexample to i(GxH) >= i(G)i(H): G = " << graph_to_string(graphs[a])
                  << " H = " << graph_to_string(graphs[b]) << " i(GxH) = " << i_prod << "\n";
      }
    }
  ASSERT_EQ(counterexamples, 0U) << "conjectured lower bound fails; see report above";
}
