#include "support/catalog.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace il;

namespace {

nice_tree_decomposition nice_decomposition(const graph& g) {
  return validate_and_nicify(g, exact_tree_decomposition(g, limits::unbounded()));
}

void expect_witness(const graph& g, const capacity_result& r) {
  ASSERT_TRUE(is_independent(g, r.witness));
  ASSERT_FALSE(r.witness.empty());
  ASSERT_EQ(independence_fraction(r.witness.size(), neighborhood(g, r.witness).size()), r.a);
  ASSERT_EQ(r.a_star, a_star(r.a));
}

// K_3 with a pendant vertex attached to clique vertex 0.
graph triangle_with_pendant() { return graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

}  // namespace

TEST(AStar, Branches) {
  EXPECT_EQ(a_star(ratio(2, 5)), ratio(2, 5));
  EXPECT_EQ(a_star(ratio(1, 2)), ratio(1, 2));
  EXPECT_EQ(a_star(ratio(3, 4)), ratio(1));
}

TEST(FractionalMatching, Examples) {
  EXPECT_TRUE(has_fractional_perfect_matching(gen::complete(2)));
  EXPECT_FALSE(has_fractional_perfect_matching(gen::star(3)));
  EXPECT_TRUE(has_fractional_perfect_matching(gen::cycle(5)));
  EXPECT_FALSE(has_fractional_perfect_matching(gen::path(5)));
}

TEST(Cograph, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(a_cograph(cograph_recognize(gen::complete(n))).a, ratio(1, n));
  auto star = a_cograph(parse_cotree("(* 0 (+ 1 2 3))"));
  EXPECT_EQ(star.a, ratio(3, 4));
  EXPECT_EQ(star.a_star, ratio(1));
  EXPECT_FALSE(star.has_fpm);
  EXPECT_EQ(a_cograph(parse_cotree("(* 0 (+ (* 1 2) 3))")).a, ratio(1, 2));
}

TEST(Split, Examples) {
  graph star = gen::star(3);
  EXPECT_EQ(a_split(star, find_split_partition(star)).a, ratio(3, 4));
  graph k5 = gen::complete(5);
  EXPECT_EQ(a_split(k5, find_split_partition(k5)).a, ratio(1, 5));
  graph tp = triangle_with_pendant();
  EXPECT_EQ(a_split(tp, find_split_partition(tp)).a, ratio(1, 2));
  EXPECT_EQ(a_split(gen::edgeless(3), find_split_partition(gen::edgeless(3))).a, ratio(1));
}

TEST(Interval, Examples) {
  EXPECT_EQ(a_interval({{{0, 0}, {2, 2}, {4, 4}}}).a, ratio(1));
  EXPECT_EQ(a_interval({{{0, 10}, {1, 9}, {2, 8}, {3, 7}}}).a, ratio(1, 4));
  EXPECT_EQ(a_interval({{{0, 1}, {1, 2}, {2, 3}, {3, 4}}}).a, ratio(1, 2));
}

TEST(Permutation, Examples) {
  EXPECT_EQ(a_permutation({{1, 2, 3, 4}}).a, ratio(1));
  EXPECT_EQ(a_permutation({{4, 3, 2, 1}}).a, ratio(1, 4));
  EXPECT_EQ(a_permutation({{2, 1, 4, 3}}).a, ratio(1, 2));
}

TEST(Treewidth, Examples) {
  graph p4 = gen::path(4);
  tree_decomposition td{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  EXPECT_EQ(a_treewidth(p4, validate_and_nicify(p4, td)).a, ratio(1, 2));
  graph p5 = gen::path(5);
  auto r5 = a_treewidth(p5, nice_decomposition(p5));
  EXPECT_EQ(r5.a, ratio(3, 5));
  EXPECT_EQ(r5.a_star, ratio(1));
  graph c5 = gen::cycle(5);
  EXPECT_EQ(a_treewidth(c5, nice_decomposition(c5)).a, ratio(2, 5));
}

TEST(General, Examples) {
  EXPECT_EQ(a_general_exact(gen::cycle(5)).a, ratio(2, 5));
  EXPECT_EQ(a_general_exact(gen::complete_bipartite(3, 3)).a, ratio(1, 2));
  for (std::uint64_t seed : {1, 2, 3}) {
    std::mt19937_64 rng(seed);
    graph g = gen::random_gnp(10, 0.3, rng);
    EXPECT_EQ(a_general_exact(g).a, a_bruteforce(g).value) << seed;
  }
}

TEST(General, IsolatedVertexGivesOne) {
  graph g = gen::disjoint_union(gen::complete(3), gen::edgeless(1));
  EXPECT_EQ(a_general_exact(g).a, ratio(1));
  EXPECT_EQ(tensor_capacity(g).a, ratio(1));
}

TEST(OracleEquivalence, GeneralAndTreewidthOnAllGraphsUpTo7) {
  for (const auto& g : test::graphs_up_to(7)) {
    auto brute = a_bruteforce(g).value;
    auto general = a_general_exact(g);
    ASSERT_EQ(general.a, brute) << graph_to_string(g);
    expect_witness(g, general);
    auto tw = a_treewidth(g, nice_decomposition(g));
    ASSERT_EQ(tw.a, brute) << graph_to_string(g);
    expect_witness(g, tw);
  }
}

TEST(OracleEquivalence, CographsUpTo8) {
  for (const auto& g : test::cographs_up_to(8)) {
    auto r = a_cograph(cograph_recognize(g));
    ASSERT_EQ(r.a, a_bruteforce(g).value);
    expect_witness(g, r);
  }
}

TEST(OracleEquivalence, SplitGraphsUpTo8) {
  for (const auto& g : test::splitgraphs_up_to(8)) {
    auto r = a_split(g, find_split_partition(g));
    ASSERT_EQ(r.a, a_bruteforce(g).value);
    expect_witness(g, r);
  }
}

TEST(OracleEquivalence, RandomIntervalAndPermutationModels) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    auto im = test::random_interval_model(n, rng);
    graph gi = realize_interval(im);
    auto ri = a_interval(im);
    ASSERT_EQ(ri.a, a_bruteforce(gi).value);
    expect_witness(gi, ri);
    auto pm = test::random_permutation_model(n, rng);
    graph gp = realize_permutation(pm);
    auto rp = a_permutation(pm);
    ASSERT_EQ(rp.a, a_bruteforce(gp).value);
    expect_witness(gp, rp);
  }
}

TEST(Profile, CographProfileIsExactMinimum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    cotree t = test::random_cotree(1 + trial % 12, rng);
    ASSERT_EQ(cograph_profile(t).ell, test::profile_bruteforce(t.realize()));
  }
}

TEST(Profile, TreewidthProfileIsExactMinimum) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 11;
    graph g = gen::random_gnp(n, 0.15 + 0.05 * (trial % 5), rng);
    ASSERT_EQ(treewidth_profile(g, nice_decomposition(g)).ell, test::profile_bruteforce(g));
  }
}

TEST(EngineAgreement, GraphsInSeveralClasses) {
  // Threshold-like graphs: both cographs and split graphs. Complete multipartite
  // graphs: cographs. All small graphs: treewidth and general.
  std::size_t both = 0;
  for (const auto& g : test::cographs_up_to(7)) {
    auto cg = a_cograph(cograph_recognize(g));
    auto general = a_general_exact(g);
    auto tw = a_treewidth(g, nice_decomposition(g));
    ASSERT_EQ(cg.a, general.a);
    ASSERT_EQ(tw.a, general.a);
    ASSERT_EQ(cg.a_star, general.a_star);
    ASSERT_EQ(*cg.profile, *tw.profile);
    if (is_splitgraph(g)) {
      ++both;
      auto sp = a_split(g, find_split_partition(g));
      ASSERT_EQ(sp.a, cg.a);
      ASSERT_EQ(sp.a_star, cg.a_star);
    }
  }
  EXPECT_GT(both, 100U);
  for (const auto& sizes : test::compositions_up_to(7)) {
    graph g = gen::complete_multipartite(sizes);
    ASSERT_EQ(a_cograph(cograph_recognize(g)).a, a_general_exact(g).a);
  }
}

TEST(EngineAgreement, IntervalAndPermutationAgainstGeneral) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto im = test::random_interval_model(12, rng);
    graph gi = realize_interval(im);
    ASSERT_EQ(a_interval(im).a, a_general_exact(gi).a);
    auto pm = test::random_permutation_model(12, rng);
    graph gp = realize_permutation(pm);
    ASSERT_EQ(a_permutation(pm).a, a_general_exact(gp).a);
  }
}

TEST(FractionalMatching, AStarOneIffNoFractionalPerfectMatching) {
  for (const auto& g : test::graphs_up_to(8)) {
    auto r = a_general_exact(g);
    ASSERT_EQ(r.a_star == ratio(1), !has_fractional_perfect_matching(g)) << graph_to_string(g);
    ASSERT_EQ(r.has_fpm, has_fractional_perfect_matching(g));
  }
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    graph g = gen::random_gnp(9 + trial % 2, 0.1 + 0.02 * (trial % 20), rng);
    ASSERT_EQ(a_general_exact(g).a_star == ratio(1), !has_fractional_perfect_matching(g));
  }
}

TEST(Identities, SquareHasTheSameCapacity) {
  for (const auto& g : test::graphs_up_to(5))
    ASSERT_EQ(a_general_exact(graph_power(g, 2)).a_star, a_general_exact(g).a_star) << graph_to_string(g);
}

TEST(Identities, ProductBoundedWhenOneFactorIsAtMostHalf) {
  auto graphs = test::graphs_up_to(5);
  std::vector<ratio> a;
  for (const auto& g : graphs) a.push_back(a_general_exact(g).a);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < graphs.size(); ++j) {
      if (a[i] > ratio(1, 2) && a[j] > ratio(1, 2)) continue;
      ++checked;
      auto p = tensor_capacity(categorical_product(graphs[i], graphs[j]));
      ASSERT_LE(p.a, std::max(a[i], a[j]));
    }
  EXPECT_GT(checked, 500U);
}

TEST(Identities, CapacityOfProductIsTheLargerCapacity) {
  auto graphs = test::graphs_up_to(4);
  for (const auto& g : graphs)
    for (const auto& h : graphs) {
      auto p = tensor_capacity(categorical_product(g, h));
      ASSERT_EQ(p.a_star, std::max(tensor_capacity(g).a_star, tensor_capacity(h).a_star));
    }
}

TEST(Identities, RatioOfPowersNeverExceedsCapacity) {
  // alpha(G^k)/|V|^k is non-decreasing and bounded by a*(G).
  limits lim = limits::unbounded();
  for (const auto& g : test::graphs_up_to(4)) {
    ratio cap = a_general_exact(g).a_star;
    std::size_t size = 1;
    for (std::size_t k = 1; k <= 3; ++k) {
      size *= g.num_vertices();
      ratio r(static_cast<std::int64_t>(alpha_exact(graph_power(g, k), lim).alpha), static_cast<std::int64_t>(size));
      ASSERT_LE(r, cap);
    }
  }
}

TEST(Dispatch, UnionTakesTheMaximum) {
  graph g = gen::disjoint_union(gen::star(3), gen::complete(5));
  auto r = tensor_capacity(g);
  EXPECT_EQ(r.a_star, ratio(1));
  EXPECT_EQ(r.a, ratio(3, 4));
  EXPECT_FALSE(r.has_fpm);
  auto graphs = test::graphs_up_to(4);
  for (const auto& x : graphs)
    for (const auto& y : graphs) {
      auto u = tensor_capacity(gen::disjoint_union(x, y));
      ASSERT_EQ(u.a, std::max(tensor_capacity(x).a, tensor_capacity(y).a));
      ASSERT_EQ(u.a, a_bruteforce(gen::disjoint_union(x, y)).value);
    }
}

TEST(Dispatch, CertificatesChooseTheClassEngine) {
  graph c5 = gen::cycle(5);
  EXPECT_EQ(tensor_capacity(c5).engine, engine_kind::general);
  EXPECT_EQ(tensor_capacity(c5).a, ratio(2, 5));

  graph p3 = gen::path(3);
  capacity_input in{p3, cograph_recognize(p3), find_split_partition(p3), {}, {}, nice_decomposition(p3)};
  EXPECT_EQ(tensor_capacity(in).engine, engine_kind::cograph);
  in.cotree_cert.reset();
  EXPECT_EQ(tensor_capacity(in).engine, engine_kind::split);
  in.split_cert.reset();
  EXPECT_EQ(tensor_capacity(in).engine, engine_kind::treewidth);
  in.interval_cert = interval_model{{{0, 1}, {1, 2}, {2, 3}}};
  EXPECT_EQ(tensor_capacity(in).engine, engine_kind::interval);
  // Segments 0 and 1 both cross segment 2.
  capacity_input perm{graph(3, {{0, 2}, {1, 2}}), {}, {}, {}, permutation_model{{2, 3, 1}}, {}};
  EXPECT_EQ(tensor_capacity(perm).engine, engine_kind::permutation);
  EXPECT_EQ(tensor_capacity(perm).a, ratio(2, 3));
}

TEST(Dispatch, MismatchedCertificateIsRejected) {
  graph p4 = gen::path(4);
  capacity_input in{p4, parse_cotree("(* 0 (+ 1 2 3))"), {}, {}, {}, {}};
  EXPECT_THROW(tensor_capacity(in), input_error);
  capacity_input bad_model{p4, {}, {}, interval_model{{{0, 0}, {1, 1}, {2, 2}, {3, 3}}}, {}, {}};
  EXPECT_THROW(tensor_capacity(bad_model), input_error);
  capacity_input bad_split{gen::star(3), {}, split_partition{vertex_set::of(4, std::vector<vertex>{0, 1}),
                                                             vertex_set::of(4, std::vector<vertex>{2, 3})},
                           {}, {}, {}};
  EXPECT_THROW(tensor_capacity(bad_split), input_error);
}

TEST(Threads, ResultIsIndependentOfThreadCount) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    graph g = gen::random_gnp(18, 0.25, rng);
    capacity_options one;
    auto base = a_general_exact(g, one);
    for (std::size_t t : {2, 3, 4}) {
      capacity_options opt;
      opt.threads = t;
      auto r = a_general_exact(g, opt);
      ASSERT_EQ(r.a, base.a);
      ASSERT_EQ(r.witness, base.witness);
    }
  }
}

TEST(General, RespectsVertexLimit) {
  capacity_options opt;
  opt.lim.general_vertices = 8;
  EXPECT_THROW(a_general_exact(gen::cycle(9), opt), limit_exceeded);
}
