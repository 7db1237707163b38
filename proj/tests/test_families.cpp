#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <tuple>

#include "graphinv/families.hpp"
#include "graphinv/generators.hpp"
#include "graphinv/inverse.hpp"
#include "graphinv/isomorphism.hpp"
#include "oracles.hpp"

using namespace graphinv;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Parse;
}

WeightedGraph signed_edges(std::size_t n, std::initializer_list<std::tuple<int, int, int>> es) {
  WeightedGraph g(n);
  for (auto [a, b, s] : es) g.add_edge(a, b, s);
  return g;
}

}  // namespace

TEST(Stellate, Examples) {
  EXPECT_EQ(stellate(gen::path(2)).graph, gen::path(2));
  Stellation star = stellate(gen::star(4));
  EXPECT_EQ(star.graph.order(), 8U);
  EXPECT_TRUE(is_isomorphic(star.graph, corona(gen::complete(4))));
  EXPECT_TRUE(is_isomorphic(stellate(gen::cycle(3)).graph, gen::cycle(6)));
  EXPECT_EQ(stellate(gen::path(3)).graph, gen::path(4));
}

TEST(Stellate, MapIsConsistent) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 100; ++k) {
    WeightedGraph g = underlying(gen::random_graph(1 + k % 7, 0.5, 0.0, rng));
    Stellation st = stellate(g);
    std::size_t degree_sum = 0, clique_edges = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
      degree_sum += g.degree(v);
      clique_edges += g.degree(v) * (g.degree(v) - 1) / 2;
      EXPECT_EQ(st.map.clique_of[v].size(), g.degree(v));
    }
    EXPECT_EQ(st.graph.order(), degree_sum);
    EXPECT_EQ(st.graph.size(), clique_edges + g.size());
    std::vector<Edge> m;
    for (const auto& [e, me] : st.map.matching_edge) m.push_back(me);
    EXPECT_EQ(m.size(), g.size());
    EXPECT_TRUE(is_perfect_matching(st.graph, m));
    for (VertexId x = 0; x < st.graph.order(); ++x) {
      auto [v, e] = st.map.origin[x];
      EXPECT_TRUE(e.u == v || e.v == v);
    }
  }
}

TEST(Corona, Examples) {
  EXPECT_EQ(corona(WeightedGraph(1)), gen::path(2));
  WeightedGraph net = corona(gen::cycle(3));
  EXPECT_EQ(net.order(), 6U);
  EXPECT_EQ(net.size(), 6U);
  EXPECT_TRUE(is_isomorphic(corona(gen::path(2)), gen::path(4)));
}

TEST(Corona, RecognitionUnderRelabeling) {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 100; ++k) {
    WeightedGraph h = underlying(gen::random_graph(1 + k % 6, 0.5, 0.0, rng));
    WeightedGraph g = oracle::relabel(corona(h), oracle::random_permutation(2 * h.order(), rng));
    auto c = recognize_corona(g);
    ASSERT_TRUE(c) << serialize_graph(g);
    for (std::size_t i = 0; i < c->core.size(); ++i) {
      EXPECT_TRUE(g.has_edge(c->core[i], c->pendant[i]));
      EXPECT_EQ(g.degree(c->pendant[i]), 1U);
    }
  }
  EXPECT_FALSE(recognize_corona(gen::cycle(4)));
  EXPECT_FALSE(recognize_corona(gen::star(3)));
}

TEST(StellatedTree, Recognition) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& t : gen::trees(n)) {
      auto st = recognize_stellated_tree(stellate(t).graph);
      ASSERT_TRUE(st);
      EXPECT_TRUE(is_isomorphic(st->tree, t));
    }
  EXPECT_FALSE(recognize_stellated_tree(stellate(gen::cycle(4)).graph));
  EXPECT_FALSE(recognize_stellated_tree(gen::cycle(3)));
}

TEST(AlternatingPath, Examples) {
  WeightedGraph p4 = gen::path(4);
  std::vector<Edge> m{Edge(0, 1), Edge(2, 3)};
  auto p = alternating_path_between(p4, m, 0, 3);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(p->tau, 1U);
  EXPECT_FALSE(alternating_path_between(p4, m, 0, 2));
  for (const Edge& e : m) {
    auto q = alternating_path_between(p4, m, e.u, e.v);
    ASSERT_TRUE(q);
    EXPECT_EQ(q->tau, 0U);
    EXPECT_EQ(q->vertices.size(), 2U);
  }
  EXPECT_EQ(code_of([&] { alternating_path_between(p4, {Edge(1, 2)}, 0, 3); }), ErrorCode::NotPerfectMatching);
}

TEST(StellatedTreeInverse, Examples) {
  EXPECT_EQ(stellated_tree_inverse(SignedGraph(gen::path(4))).graph(), signed_edges(4, {{0, 1, 1}, {2, 3, 1}, {0, 3, -1}}));
  EXPECT_EQ(stellated_tree_inverse(SignedGraph(gen::path(2))).graph(), gen::path(2));

  WeightedGraph st = stellate(gen::star(4)).graph;
  WeightedGraph inv = stellated_tree_inverse(SignedGraph(st)).graph();
  EXPECT_EQ(inv, oracle_inverse(st));
  // Matching edges stay +1; the remaining six edges form a -1 K4.
  std::size_t positive = 0, negative = 0;
  for (const auto& [e, w] : inv.edges()) (w > 0 ? positive : negative)++;
  EXPECT_EQ(positive, 4U);
  EXPECT_EQ(negative, 6U);
  EXPECT_EQ(code_of([] { stellated_tree_inverse(SignedGraph(gen::cycle(3))); }), ErrorCode::NotStellatedTree);
}

TEST(StellatedTreeInverse, MatchesOracleUnderRandomSignatures) {
  std::mt19937_64 rng(71);
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& t : gen::trees(n))
      for (int s = 0; s < 5; ++s) {
        SignedGraph g(gen::random_signature(stellate(t).graph, rng));
        EXPECT_EQ(stellated_tree_inverse(g).graph(), oracle_inverse(g.graph()));
      }
}

TEST(CoronaInverse, Examples) {
  EXPECT_EQ(corona_inverse(SignedGraph(gen::path(2))).graph(), gen::path(2));
  EXPECT_EQ(corona_inverse(SignedGraph(corona(gen::path(2)))).graph(),
            signed_edges(4, {{0, 2, 1}, {1, 3, 1}, {2, 3, -1}}));
  WeightedGraph net = corona(gen::cycle(3));
  EXPECT_EQ(corona_inverse(SignedGraph(net)).graph(),
            signed_edges(6, {{0, 3, 1}, {1, 4, 1}, {2, 5, 1}, {3, 4, -1}, {4, 5, -1}, {3, 5, -1}}));
  EXPECT_EQ(code_of([] { corona_inverse(SignedGraph(gen::cycle(4))); }), ErrorCode::NotCorona);
}

TEST(CoronaInverse, MatchesOracleUnderRandomSignatures) {
  std::mt19937_64 rng(73);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& h : gen::connected_graphs(n))
      for (int s = 0; s < 3; ++s) {
        SignedGraph g(gen::random_signature(corona(h), rng));
        EXPECT_EQ(corona_inverse(g).graph(), oracle_inverse(g.graph()));
      }
}

TEST(SelfInvertible, Examples) {
  EXPECT_TRUE(is_self_invertible(SignedGraph(gen::path(2))).self_invertible);
  EXPECT_EQ(code_of([] { is_self_invertible(SignedGraph(gen::cycle(3))); }), ErrorCode::NotSigned);
}

TEST(SelfInvertible, SignedCoronasWithSwapWitness) {
  std::mt19937_64 rng(79);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& h : gen::connected_graphs(n)) {
      SignedGraph g(gen::random_signature(corona(h), rng));
      SelfInverseResult r = is_self_invertible(g);
      EXPECT_TRUE(r.self_invertible);
      ASSERT_TRUE(r.witness);
      WeightedGraph inv = underlying(oracle_inverse(g.graph()));
      EXPECT_TRUE(is_isomorphism(underlying(g.graph()), inv, *r.witness));
      EXPECT_TRUE(is_isomorphism(underlying(g.graph()), inv, corona_swap(*recognize_corona(g.graph()))));
    }
}
