#include "support/catalog.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace il;

namespace {

capacity crossing_capacity(const flow_network& net, const cut_result& cut) {
  capacity total = 0;
  for (std::size_t u = 0; u < net.node_count(); ++u)
    for (const auto& a : net.arcs()[u])
      if (a.original > 0 && cut.source_side[u] && !cut.source_side[a.to]) total += a.original;
  return total;
}

}  // namespace

TEST(MaxFlow, SmallNetwork) {
  flow_network net(4, 0, 3);
  net.add_arc(0, 1, 3);
  net.add_arc(0, 2, 2);
  net.add_arc(1, 2, 1);
  net.add_arc(1, 3, 2);
  net.add_arc(2, 3, 3);
  auto r = max_flow(net);
  EXPECT_EQ(r.value, 5);
  EXPECT_TRUE(r.cut.source_side[0]);
  EXPECT_FALSE(r.cut.source_side[3]);
  EXPECT_EQ(crossing_capacity(net, r.cut), 5);
}

TEST(MaxFlow, RejectsArcsIntoSourceOrOutOfSink) {
  flow_network net(3, 0, 2);
  EXPECT_THROW(net.add_arc(1, 0, 1), input_error);
  EXPECT_THROW(net.add_arc(2, 1, 1), input_error);
  EXPECT_THROW(net.add_arc(0, 1, -1), input_error);
}

TEST(MaxFlow, CutValueEqualsFlowOnRandomNetworks) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<capacity> cap(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 8;
    flow_network net(n, 0, n - 1);
    for (std::size_t u = 0; u + 1 < n; ++u)
      for (std::size_t v = 1; v < n; ++v)
        if (u != v && rng() % 3 == 0) net.add_arc(u, v, cap(rng));
    auto r = max_flow(net);
    ASSERT_EQ(crossing_capacity(net, r.cut), r.value);
    ASSERT_TRUE(r.cut.source_side[0]);
    ASSERT_FALSE(r.cut.source_side[n - 1]);
  }
}

TEST(BipartiteMis, KoenigOnAllBipartiteGraphs) {
  for (const auto& g : test::graphs_up_to(8)) {
    auto colour = two_coloring(g);
    if (!colour) continue;
    auto m = maximum_bipartite_matching(g, *colour);
    auto r = bipartite_mis(g, *colour);
    ASSERT_TRUE(is_independent(g, r.witness));
    ASSERT_EQ(r.witness.size(), r.alpha);
    ASSERT_EQ(r.alpha, g.num_vertices() - m.size);
    ASSERT_EQ(r.alpha, alpha_exact(g).alpha);
  }
}

TEST(BipartiteMis, RejectsImproperColouring) {
  graph g = gen::path(3);
  std::vector<int> side{0, 0, 1};
  EXPECT_THROW(bipartite_mis(g, side), input_error);
}

TEST(MinRatioSubset, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t k = 1 + rng() % 15;
    const std::size_t ground = 1 + rng() % 12;
    std::vector<std::vector<std::size_t>> nbr(k);
    for (auto& list : nbr)
      for (std::size_t c = 0; c < ground; ++c)
        if (rng() % 4 == 0) list.push_back(c);
    auto r = min_ratio_subset(nbr, ground);
    auto [value, maximal] = test::min_ratio_bruteforce(nbr);
    ASSERT_EQ(r.value, value);
    // The returned set is the union of all minimisers: a minimiser with no
    // minimising strict superset.
    ASSERT_EQ(r.subset, maximal);
  }
}

TEST(MinRatioSubset, VertexFormOnGraph) {
  graph g = gen::star(3);
  auto leaves = vertex_set::of(4, std::vector<vertex>{1, 2, 3});
  auto r = min_ratio_subset(g, leaves);
  EXPECT_EQ(r.value, ratio(1, 3));
  EXPECT_EQ(r.subset, leaves);
  EXPECT_THROW(min_ratio_subset(g, vertex_set::of(4, std::vector<vertex>{0, 1})), input_error);
}

TEST(MinRatioSubset, DifferenceRecursionCanMissTheOptimum) {
  // Seven sets over ground {a,b,c,d,e}: {a},{a},{b,c},{c,d},{d,e},{e,b},{b,d}.
  // The unique minimiser of |N(S')| - |S'| is all seven (difference -2,
  // ratio 5/7), while {0,1} alone has ratio 1/2.
  std::vector<std::vector<std::size_t>> nbr{{0}, {0}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}};
  auto exact = min_ratio_subset(nbr, 5);
  EXPECT_EQ(exact.value, ratio(1, 2));
  EXPECT_EQ(exact.subset, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(test::min_ratio_bruteforce(nbr).first, ratio(1, 2));
  auto by_difference = min_ratio_subset_by_difference(nbr, 5);
  ASSERT_TRUE(by_difference.has_value());
  EXPECT_EQ(by_difference->value, ratio(5, 7));
}

TEST(MinRatioSubset, DifferenceRecursionNeverBeatsTheExactValue) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + rng() % 10;
    const std::size_t ground = 1 + rng() % 10;
    std::vector<std::vector<std::size_t>> nbr(k);
    for (auto& list : nbr)
      for (std::size_t c = 0; c < ground; ++c)
        if (rng() % 3 == 0) list.push_back(c);
    auto exact = min_ratio_subset(nbr, ground);
    if (auto d = min_ratio_subset_by_difference(nbr, ground)) ASSERT_GE(d->value, exact.value);
  }
}

TEST(MinRatioSubset, ReciprocalGivesTheIndependenceFraction) {
  // For a maximal independent set S of G, 1/(1+nu) over S equals the best
  // fraction among subsets of S; the maximum over all S is a(G).
  for (const auto& g : test::graphs_up_to(6)) {
    std::optional<ratio> best;
    for (const auto& s : enumerate_maximal_independent_sets(g)) {
      auto r = min_ratio_subset(g, s);
      ratio a(r.value.den(), r.value.den() + r.value.num());
      if (!best || a > *best) best = a;
    }
    ASSERT_EQ(*best, a_bruteforce(g).value);
  }
}
