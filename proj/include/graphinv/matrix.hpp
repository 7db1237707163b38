#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "graphinv/error.hpp"
#include "graphinv/graph.hpp"
#include "graphinv/rational.hpp"

namespace graphinv {

/// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  SquareMatrix(std::size_t n, std::vector<T> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) throw Error(ErrorCode::IndexOutOfRange, "matrix data has wrong size");
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = SquareMatrix<Rational>;

/// A[i][j] = w(ij) on edges and loops, zero elsewhere.
inline ExactMatrix adjacency_matrix(const WeightedGraph& g) {
  ExactMatrix a(g.order());
  for (const auto& [e, w] : g.edges()) {
    a(e.u, e.v) = w;
    a(e.v, e.u) = w;
  }
  return a;
}

/// Reads a symmetric matrix back as a weighted graph; zero entries give no edge.
inline WeightedGraph graph_from_matrix(const ExactMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  WeightedGraph g(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (m(i, j) != 0) g.add_edge(i, j, m(i, j));
  return g;
}

/// Fraction-free (Bareiss) elimination with row pivoting.
inline Rational determinant(ExactMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  Rational prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Rational next = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        next /= prev_pivot;
        m(i, j) = std::move(next);
      }
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Rational(-m(n - 1, n - 1));
}

/// Exact inverse by Gauss-Jordan elimination; Singular when det = 0.
inline ExactMatrix invert_matrix_exact(const ExactMatrix& m) {
  if (determinant(m) == 0) throw Error(ErrorCode::Singular, "determinant is zero");
  const std::size_t n = m.dim();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a(pivot, col) == 0) ++pivot;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    Rational scale = 1 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace graphinv
