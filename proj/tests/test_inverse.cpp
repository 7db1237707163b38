#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "graphinv/generators.hpp"
#include "graphinv/inverse.hpp"
#include "oracles.hpp"

using namespace graphinv;

namespace {

WeightedGraph p4_inverse() {
  WeightedGraph g(4);
  g.add_edge(0, 1, 1);
  g.add_edge(2, 3, 1);
  g.add_edge(0, 3, -1);
  return g;
}

WeightedGraph c3_inverse() {
  WeightedGraph g(3);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}}) g.add_edge(a, b, ratio(1, 2));
  for (VertexId v = 0; v < 3; ++v) g.add_edge(v, v, ratio(-1, 2));
  return g;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Parse;
}

}  // namespace

TEST(InvertGraph, Examples) {
  EXPECT_EQ(invert_graph(parse_graph("2 1\n0 1 3")).inverse, parse_graph("2 1\n0 1 1/3"));
  EXPECT_EQ(invert_graph(gen::cycle(3)).inverse, c3_inverse());
  EXPECT_EQ(invert_graph(gen::path(4)).inverse, p4_inverse());
  EXPECT_EQ(code_of([] { invert_graph(gen::cycle(4)); }), ErrorCode::Singular);
  EXPECT_EQ(code_of([] { invert_graph(gen::cycle(4), InverseMethod::structural); }), ErrorCode::Singular);
}

TEST(InvertGraph, BothMethodsReportAgreement) {
  InverseReport r = invert_graph(gen::path(4), InverseMethod::both);
  ASSERT_TRUE(r.agreement);
  EXPECT_TRUE(*r.agreement);
  EXPECT_FALSE(invert_graph(gen::path(4)).agreement);
}

TEST(AdmissiblePaths, PathExamples) {
  WeightedGraph p4 = gen::path(4);
  auto whole = enumerate_admissible_paths(p4, 0, 3);
  ASSERT_EQ(whole.size(), 1U);
  EXPECT_EQ(whole[0].vertices, (std::vector<VertexId>{0, 1, 2, 3}));
  ASSERT_EQ(whole[0].complement_sachs.size(), 1U);
  EXPECT_EQ(whole[0].complement_sachs[0].edge_count(), 0U);

  auto edge = enumerate_admissible_paths(p4, 0, 1);
  ASSERT_EQ(edge.size(), 1U);
  EXPECT_EQ(edge[0].vertices, (std::vector<VertexId>{0, 1}));
  ASSERT_EQ(edge[0].complement_sachs.size(), 1U);
  EXPECT_EQ(edge[0].complement_sachs[0].matching, std::vector<Edge>{Edge(2, 3)});

  EXPECT_TRUE(enumerate_admissible_paths(p4, 0, 2).empty());
}

TEST(StructuralInverse, Examples) {
  EXPECT_EQ(structural_inverse(gen::path(4)), p4_inverse());
  EXPECT_EQ(structural_inverse(gen::cycle(3)), c3_inverse());
  EXPECT_EQ(structural_inverse(parse_graph("2 1\n0 1 -2/7")), parse_graph("2 1\n0 1 -7/2"));
}

TEST(StructuralInverse, MatchesMatrixInverseOnRandomGraphs) {
  std::mt19937_64 rng(47);
  int invertible = 0;
  for (int k = 0; k < 300; ++k) {
    WeightedGraph g = gen::random_graph(1 + k % 8, 0.5, 0.3, rng);
    if (oracle::leibniz_det(adjacency_matrix(g)) == 0) continue;
    ++invertible;
    EXPECT_EQ(structural_inverse(g), oracle_inverse(g)) << serialize_graph(g);
  }
  EXPECT_GT(invertible, 100);
}

TEST(SimplyInvertible, Examples) {
  EXPECT_TRUE(is_simply_invertible(gen::path(4)));
  EXPECT_FALSE(is_simply_invertible(gen::cycle(3)));
  EXPECT_EQ(code_of([] { is_simply_invertible(gen::cycle(4)); }), ErrorCode::Singular);
}

TEST(SimplyInvertible, InvertibleBipartiteGraphs) {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    std::size_t n = 2 + k % 7;
    WeightedGraph g = gen::random_bipartite(n, n / 2, 0.6, rng);
    if (det_via_sachs(g) == 0) continue;
    ++checked;
    EXPECT_TRUE(is_simply_invertible(g));
    WeightedGraph inv = oracle_inverse(g);
    EXPECT_EQ(inv.loop_count(), 0U);
  }
  EXPECT_GT(checked, 30);
}

TEST(IntegralInverse, Examples) {
  EXPECT_TRUE(has_integral_inverse(SignedGraph(gen::path(4))));
  EXPECT_FALSE(has_integral_inverse(SignedGraph(gen::cycle(3))));
  WeightedGraph paw(4);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {2, 3}}) paw.add_edge(a, b, 1);
  // The only Sachs subgraph of the paw is the perfect matching {23, 01}.
  EXPECT_TRUE(has_integral_inverse(SignedGraph(paw)));
  WeightedGraph inv = oracle_inverse(paw);
  for (const auto& [e, w] : inv.edges()) EXPECT_TRUE(is_integer(w));
  EXPECT_EQ(code_of([] { has_integral_inverse(SignedGraph(gen::cycle(4))); }), ErrorCode::NotUniqueSachs);
}

TEST(IntegralInverse, AgreesWithOracleOnRandomSignedGraphs) {
  std::mt19937_64 rng(59);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    WeightedGraph g = gen::random_signature(underlying(gen::random_graph(2 + k % 9, 0.3, 0.0, rng)), rng);
    if (!has_unique_sachs(g).unique) continue;
    ++checked;
    bool want = true;
    WeightedGraph inv = oracle_inverse(g);
    for (const auto& [e, w] : inv.edges()) want = want && is_integer(w);
    EXPECT_EQ(has_integral_inverse(SignedGraph(g)), want);
  }
  EXPECT_GT(checked, 50);
}
