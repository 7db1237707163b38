#include <gtest/gtest.h>

#include <random>

#include "graphinv/generators.hpp"
#include "graphinv/matrix.hpp"
#include "oracles.hpp"

using namespace graphinv;

TEST(ExactMatrix, InverseExamples) {
  ExactMatrix k2 = adjacency_matrix(gen::path(2));
  EXPECT_EQ(invert_matrix_exact(k2), k2);
  EXPECT_EQ(invert_matrix_exact(adjacency_matrix(parse_graph("1 1\n0 0 5")))(0, 0), ratio(1, 5));
  ExactMatrix p4inv = invert_matrix_exact(adjacency_matrix(gen::path(4)));
  const int want[4][4] = {{0, 1, 0, -1}, {1, 0, 0, 0}, {0, 0, 0, 1}, {-1, 0, 1, 0}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(p4inv(i, j), want[i][j]);
}

TEST(ExactMatrix, SingularThrows) {
  try {
    invert_matrix_exact(adjacency_matrix(gen::cycle(4)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
}

TEST(ExactMatrix, BareissMatchesLeibniz) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 300; ++k) {
    WeightedGraph g = gen::random_graph(1 + k % 7, 0.6, 0.4, rng);
    ExactMatrix a = adjacency_matrix(g);
    EXPECT_EQ(determinant(a), oracle::leibniz_det(a)) << serialize_graph(g);
  }
}

TEST(ExactMatrix, InverseTimesMatrixIsIdentity) {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    WeightedGraph g = gen::random_graph(1 + k % 8, 0.6, 0.4, rng);
    ExactMatrix a = adjacency_matrix(g);
    if (determinant(a) == 0) continue;
    ++checked;
    EXPECT_EQ(a * invert_matrix_exact(a), ExactMatrix::identity(g.order()));
  }
  EXPECT_GT(checked, 100);
}
