#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "graphinv/error.hpp"
#include "graphinv/families.hpp"
#include "graphinv/graph.hpp"
#include "graphinv/inverse.hpp"
#include "graphinv/matrix.hpp"
#include "graphinv/sachs.hpp"

namespace graphinv {

using FloatMatrix = SquareMatrix<double>;

inline FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix f(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) f(i, j) = m(i, j).get_d();
  return f;
}

inline double frobenius_norm(const FloatMatrix& m) {
  double s = 0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

/// Zero line tau0 = 1e-9 * max(1, ||A||_F).
inline double zero_tolerance(const FloatMatrix& m) { return 1e-9 * std::max(1.0, frobenius_norm(m)); }

/// Eigenvalues in descending order with matching unit eigenvectors.
struct Spectrum {
  std::vector<double> values;
  /// vectors[k] belongs to values[k].
  std::vector<std::vector<double>> vectors;
  double zero_tolerance = 0;

  std::size_t size() const { return values.size(); }
};

inline constexpr int kMaxSweeps = 100;

/// Cyclic Jacobi rotation method: sweeps pairs (p, q) in row order until the
/// off-diagonal Frobenius norm drops to 1e-12 * ||A||_F.
inline Spectrum eigenvalues(const FloatMatrix& m) {
  const std::size_t n = m.dim();
  const double norm = frobenius_norm(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * std::max(1.0, norm)) {
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
      }

  FloatMatrix a = m;
  FloatMatrix v = FloatMatrix::identity(n);
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > 1e-12 * norm; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  Spectrum s;
  s.zero_tolerance = 1e-9 * std::max(1.0, norm);
  for (std::size_t k : order) {
    s.values.push_back(a(k, k));
    std::vector<double> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v(r, k);
    s.vectors.push_back(std::move(col));
  }
  return s;
}

inline Spectrum spectrum_of(const WeightedGraph& g) { return eigenvalues(to_float(adjacency_matrix(g))); }

/// Largest ||A v - lambda v||_2 over the reported pairs.
inline double max_residual(const FloatMatrix& m, const Spectrum& s) {
  double worst = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    double r2 = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      double av = 0;
      for (std::size_t j = 0; j < m.dim(); ++j) av += m(i, j) * s.vectors[k][j];
      double d = av - s.values[k] * s.vectors[k][i];
      r2 += d * d;
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  return worst;
}

/// Eigenvalues inside [-tau0, tau0].
inline std::size_t near_zero_count(const Spectrum& s) {
  return static_cast<std::size_t>(std::count_if(s.values.begin(), s.values.end(),
                                                [&](double x) { return std::abs(x) <= s.zero_tolerance; }));
}

/// Exactly half the eigenvalues above tau0 and half below -tau0. Any
/// eigenvalue within the zero band forces false (see near_zero_count).
inline bool spectrum_splits(const Spectrum& s) {
  const std::size_t n = s.size();
  if (n % 2 == 1 || near_zero_count(s) > 0) return false;
  auto pos = static_cast<std::size_t>(
      std::count_if(s.values.begin(), s.values.end(), [&](double x) { return x > s.zero_tolerance; }));
  return 2 * pos == n;
}

/// Sorted values equal their own negation pairwise within tol.
inline bool is_symmetric_spectrum(const Spectrum& s, double tol) {
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k)
    if (std::abs(s.values[k] + s.values[n - 1 - k]) > tol) return false;
  return true;
}

struct MedianReport {
  /// 1-based positions floor((n+1)/2) and ceil((n+1)/2) in descending order.
  std::size_t H = 0;
  std::size_t L = 0;
  double lambda_H = 0;
  double lambda_L = 0;
  double gap = 0;
  bool splits = false;
  bool symmetric = false;
};

inline constexpr double kSymmetryTolerance = 1e-8;

inline MedianReport median_eigenvalues(const Spectrum& s, double symmetry_tol = kSymmetryTolerance) {
  const std::size_t n = s.size();
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "median eigenvalues of an empty spectrum");
  MedianReport r;
  r.H = (n + 1) / 2;
  r.L = (n + 2) / 2;
  r.lambda_H = s.values[r.H - 1];
  r.lambda_L = s.values[r.L - 1];
  r.gap = r.lambda_H - r.lambda_L;
  r.splits = spectrum_splits(s);
  r.symmetric = is_symmetric_spectrum(s, symmetry_tol);
  return r;
}

inline constexpr double kReciprocityTolerance = 1e-7;

/// Median eigenvalues from the extreme eigenvalues of the inverse:
/// lambda_H = 1/lambda_1(G^-1), lambda_L = 1/lambda_n(G^-1). Requires a split
/// spectrum and must agree with the direct route within 1e-7.
inline MedianReport median_via_inverse(const WeightedGraph& g) {
  Spectrum direct = spectrum_of(g);
  if (!spectrum_splits(direct)) throw Error(ErrorCode::NoSplit, "spectrum does not split about the origin");
  Spectrum inv = spectrum_of(oracle_inverse(g));
  MedianReport r = median_eigenvalues(direct);
  double via_h = 1.0 / inv.values.front();
  double via_l = 1.0 / inv.values.back();
  if (std::abs(via_h - r.lambda_H) > kReciprocityTolerance || std::abs(via_l - r.lambda_L) > kReciprocityTolerance) {
    throw Error(ErrorCode::Disagreement, "median eigenvalues via the inverse differ from the direct spectrum");
  }
  r.lambda_H = via_h;
  r.lambda_L = via_l;
  r.gap = via_h - via_l;
  return r;
}

/// Combinatorial split certificate: a unique Sachs subgraph that is a perfect
/// matching. False means "no certificate", not "does not split".
inline bool split_certificate(const SignedGraph& sg) {
  const WeightedGraph& g = sg.graph();
  if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "split certificate expects a simple graph");
  UniqueSachsResult u = has_unique_sachs(g);
  return u.unique && u.witness->is_perfect_matching();
}

struct WeightSweepReport {
  std::size_t samples = 0;
  std::size_t singular = 0;
  Rational min_abs_det;
  /// First singular weighting found, if any.
  std::optional<WeightedGraph> counterexample;
};

/// Falsifier for the weight-interval hypothesis: draws weightings with values
/// in [-1, 1] (multiples of 1/1000) off the matching and +-1 on it, and
/// evaluates each determinant exactly. Sample 0 is the signature itself.
inline WeightSweepReport sampled_weight_sweep(const SignedGraph& sg, const std::vector<Edge>& m, std::size_t samples,
                                              std::uint64_t seed) {
  const WeightedGraph& g = sg.graph();
  if (!is_perfect_matching(g, m)) throw Error(ErrorCode::NotPerfectMatching, "matching is not perfect");
  std::vector<Edge> sorted_m = m;
  std::sort(sorted_m.begin(), sorted_m.end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> off(-1000, 1000);
  std::uniform_int_distribution<int> coin(0, 1);

  WeightSweepReport report;
  for (std::size_t k = 0; k < samples; ++k) {
    WeightedGraph w(g.order());
    for (const auto& [e, sigma] : g.edges()) {
      bool in_m = std::binary_search(sorted_m.begin(), sorted_m.end(), e);
      if (k == 0) {
        w.add_edge(e.u, e.v, sigma);
      } else if (in_m) {
        w.add_edge(e.u, e.v, coin(rng) ? 1 : -1);
      } else {
        int num = off(rng);
        if (num != 0) w.add_edge(e.u, e.v, ratio(num, 1000));
      }
    }
    Rational det = det_via_sachs(w);
    Rational mag = abs(det);
    if (report.samples == 0 || mag < report.min_abs_det) report.min_abs_det = mag;
    ++report.samples;
    if (det == 0) {
      ++report.singular;
      if (!report.counterexample) report.counterexample = std::move(w);
    }
  }
  return report;
}

enum class Family { stellated_tree, corona };

/// -1 - tol <= lambda_L < 0 < lambda_H <= 1 + tol for an unweighted member of
/// the declared family. tol defaults to the spectrum's zero line.
inline bool check_median_bounds(const WeightedGraph& g, Family family, std::optional<double> tol = std::nullopt) {
  if (!g.is_unweighted()) throw Error(ErrorCode::WrongFamily, "bounds apply to graphs with all weights +1");
  bool member = family == Family::stellated_tree ? recognize_stellated_tree(g).has_value()
                                                 : recognize_corona(g).has_value();
  if (!member) throw Error(ErrorCode::WrongFamily, "graph is not in the declared family");
  Spectrum s = spectrum_of(g);
  MedianReport r = median_eigenvalues(s);
  double t = tol.value_or(s.zero_tolerance);
  return -1.0 - t <= r.lambda_L && r.lambda_L < 0.0 && 0.0 < r.lambda_H && r.lambda_H <= 1.0 + t;
}

}  // namespace graphinv
