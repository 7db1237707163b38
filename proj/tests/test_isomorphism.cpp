#include <gtest/gtest.h>

#include <random>

#include "graphinv/families.hpp"
#include "graphinv/generators.hpp"
#include "graphinv/inverse.hpp"
#include "graphinv/isomorphism.hpp"
#include "oracles.hpp"

using namespace graphinv;

TEST(Isomorphism, RelabeledPath) {
  WeightedGraph p4 = gen::path(4);
  WeightedGraph q = oracle::relabel(p4, {2, 0, 3, 1});
  auto phi = is_isomorphic(p4, q);
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_isomorphism(p4, q, *phi));
}

TEST(Isomorphism, PathVersusStar) { EXPECT_FALSE(is_isomorphic(gen::path(4), gen::star(3))); }

TEST(Isomorphism, LoopsMatterWeightsDoNot) {
  EXPECT_FALSE(is_isomorphic(parse_graph("2 2\n0 1 1\n0 0 1"), gen::path(2)));
  EXPECT_TRUE(is_isomorphic(parse_graph("2 2\n0 1 3\n1 1 -2"), parse_graph("2 2\n0 1 1\n0 0 1")));
}

TEST(Isomorphism, CoronaOfTriangleAgainstItsInverse) {
  WeightedGraph g = corona(gen::cycle(3));
  WeightedGraph inv = underlying(oracle_inverse(g));
  auto c = recognize_corona(g);
  ASSERT_TRUE(c);
  std::vector<VertexId> swap = corona_swap(*c);
  EXPECT_TRUE(is_isomorphism(g, inv, swap));
  auto found = is_isomorphic(g, inv);
  ASSERT_TRUE(found);
  EXPECT_TRUE(is_isomorphism(g, inv, *found));
}

TEST(Isomorphism, RandomRelabelingsAreFound) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    WeightedGraph g = underlying(gen::random_graph(1 + k % 10, 0.4, 0.2, rng));
    WeightedGraph h = oracle::relabel(g, oracle::random_permutation(g.order(), rng));
    auto phi = is_isomorphic(g, h);
    ASSERT_TRUE(phi);
    EXPECT_TRUE(is_isomorphism(g, h, *phi));
  }
}

TEST(Isomorphism, DistinctClassesAreNotIsomorphic) {
  auto classes = gen::connected_graphs(5);
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) EXPECT_FALSE(is_isomorphic(classes[a], classes[b]));
}

TEST(Isomorphism, RefusesLargeGraphs) {
  EXPECT_THROW(is_isomorphic(gen::path(kIsomorphismCap + 1), gen::path(kIsomorphismCap + 1)), Error);
}
