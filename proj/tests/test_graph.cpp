#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "graphinv/generators.hpp"
#include "graphinv/graph.hpp"
#include "graphinv/matrix.hpp"
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

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("-2/4"), ratio(-1, 2));
  EXPECT_EQ(parse_rational("0.125"), ratio(1, 8));
  EXPECT_EQ(parse_rational("-.5"), ratio(-1, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  // leading zeros are decimal, not octal
  EXPECT_EQ(parse_rational("010"), 10);
  EXPECT_EQ(parse_rational("09/010"), ratio(9, 10));
  EXPECT_EQ(parse_rational("0.08"), ratio(2, 25));
  for (const char* bad : {"", "1e3", "1/0", "x", "1/", "/2", "--1", "1.2.3"})
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::Parse) << bad;
}

TEST(Parse, SmallestGraph) {
  WeightedGraph g = parse_graph("2 1\n0 1 1");
  EXPECT_EQ(g.order(), 2U);
  EXPECT_EQ(g.size(), 1U);
  EXPECT_EQ(*g.find(1, 0), 1);
}

TEST(Parse, Loop) {
  WeightedGraph g = parse_graph("1 1\n0 0 5");
  EXPECT_TRUE(g.has_loop(0));
  EXPECT_EQ(*g.find(0, 0), 5);
  EXPECT_FALSE(g.is_simple());
  EXPECT_EQ(g.degree(0), 1U);
}

TEST(Parse, TriangleWithCommentsAndBlankLines) {
  WeightedGraph g = parse_graph("# a triangle\n3 3\n\n0 1 1\n1 2 1\n# mid\n0 2 1\n");
  EXPECT_EQ(g, gen::cycle(3));
}

TEST(Parse, Errors) {
  EXPECT_EQ(code_of([] { parse_graph("2 2\n0 1 1\n1 0 2"); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { parse_graph("2 1\n0 1 0"); }), ErrorCode::ZeroWeight);
  EXPECT_EQ(code_of([] { parse_graph("2 1\n0 2 1"); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { parse_graph("2 2\n0 1 1"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_graph("2 1\n0 1"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { parse_graph(""); }), ErrorCode::Parse);
}

TEST(Parse, RoundTripOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    WeightedGraph g = gen::random_graph(1 + k % 8, 0.5, 0.3, rng);
    std::string text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  }
}

TEST(Adjacency, Examples) {
  ExactMatrix k2 = adjacency_matrix(gen::path(2));
  EXPECT_EQ(k2(0, 1), 1);
  EXPECT_EQ(k2(0, 0), 0);
  EXPECT_EQ(adjacency_matrix(parse_graph("1 1\n0 0 5"))(0, 0), 5);
  ExactMatrix p4 = adjacency_matrix(gen::path(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(p4(i, j), (i + 1 == j || j + 1 == i) ? 1 : 0);
}

TEST(Adjacency, SymmetricAndInvertibleToGraph) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    WeightedGraph g = gen::random_graph(1 + k % 8, 0.5, 0.3, rng);
    ExactMatrix a = adjacency_matrix(g);
    EXPECT_TRUE(a.is_symmetric());
    EXPECT_EQ(graph_from_matrix(a), g);
  }
}

TEST(DeleteVertex, Examples) {
  WeightedGraph star = delete_vertex(gen::star(4), 0);
  EXPECT_EQ(star.order(), 4U);
  EXPECT_EQ(star.size(), 0U);
  EXPECT_EQ(delete_vertex(gen::cycle(3), 1), gen::path(2));
  EXPECT_EQ(delete_vertex(gen::path(4), 0), gen::path(3));
}

TEST(DeleteVertex, RemovesExactlyIncidentEdges) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    WeightedGraph g = gen::random_graph(2 + k % 7, 0.5, 0.3, rng);
    VertexId v = k % g.order();
    std::size_t incident = g.neighbors(v).size() + (g.has_loop(v) ? 1 : 0);
    WeightedGraph h = delete_vertex(g, v);
    EXPECT_EQ(h.order() + 1, g.order());
    EXPECT_EQ(h.size() + incident, g.size());
  }
}

TEST(Switching, Examples) {
  SignedGraph c3(gen::cycle(3));
  EXPECT_EQ(switch_cut(c3, {false, false, false}), c3);
  EXPECT_EQ(switch_cut(c3, {true, true, true}), c3);
  SignedGraph k2(gen::path(2));
  EXPECT_EQ(switch_cut(k2, {true, false}).sign(0, 1), -1);
}

TEST(Switching, InvolutionAndBalanceInvariant) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < 200; ++k) {
    WeightedGraph base = gen::random_graph(1 + k % 8, 0.5, 0.0, rng);
    SignedGraph g(gen::random_signature(base, rng));
    std::vector<bool> side(g.order());
    for (std::size_t i = 0; i < side.size(); ++i) side[i] = coin(rng);
    SignedGraph s = switch_cut(g, side);
    EXPECT_EQ(switch_cut(s, side), g);
    EXPECT_EQ(is_balanced(s), is_balanced(g));
  }
}

TEST(Balance, Examples) {
  EXPECT_TRUE(is_balanced(SignedGraph(gen::cycle(3))));
  WeightedGraph neg = gen::path(3);
  neg.add_edge(0, 2, -1);
  EXPECT_FALSE(is_balanced(SignedGraph(neg)));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) EXPECT_TRUE(is_balanced(SignedGraph(gen::random_signature(gen::random_tree(1 + k % 9, rng), rng))));
  EXPECT_EQ(code_of([] { is_balanced(SignedGraph(parse_graph("1 1\n0 0 1"))); }), ErrorCode::HasLoops);
}

TEST(SignedGraph, RejectsNonUnitWeights) {
  EXPECT_EQ(code_of([] { SignedGraph(parse_graph("2 1\n0 1 2")); }), ErrorCode::NotSigned);
}

TEST(Generators, ConnectedGraphCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(gen::connected_graphs(n).size(), expected[n - 1]) << n;
  const std::size_t tree_counts[] = {1, 1, 1, 2, 3, 6, 11};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(gen::trees(n).size(), tree_counts[n - 1]) << n;
}

TEST(Generators, AlkaneSkeletons) {
  // methane, ethane, propane, two butanes, three pentanes
  auto alkanes = gen::alkane_trees(5);
  EXPECT_EQ(alkanes.size(), 8U);
  for (const auto& g : alkanes) {
    EXPECT_TRUE(is_tree(g));
    EXPECT_LE(g.order(), 17U);
    for (VertexId v = 0; v < g.order(); ++v) EXPECT_TRUE(g.degree(v) == 1 || g.degree(v) == 4);
  }
}
