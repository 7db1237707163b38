#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphinv/families.hpp"
#include "graphinv/generators.hpp"
#include "graphinv/inverse.hpp"
#include "graphinv/matrix.hpp"
#include "graphinv/sachs.hpp"
#include "graphinv/spectra.hpp"

/// Batch checks that pit the structural routes against the exact oracle and
/// test the spectral statements on whole graph families. Shared by the
/// acceptance suite and `graphinv verify`.
namespace graphinv::verify {

struct CheckResult {
  explicit CheckResult(std::string label) : name(std::move(label)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Config {
  std::size_t max_n = 7;             // exhaustive connected graphs
  std::size_t random_max_n = 8;      // random weighted graphs
  std::size_t random_samples = 1000;
  std::size_t tree_max = 7;
  std::size_t corona_base_max = 5;
  std::size_t stellation_base_max = 6;
  std::size_t signatures = 20;
  std::size_t reciprocity_samples = 200;
  std::size_t bipartite_samples = 500;
  std::size_t alkane_carbons = 5;
  std::uint64_t seed = 20240607;
};

inline constexpr double kBoundTolerance = 1e-7;

namespace detail {

inline std::string describe(const WeightedGraph& g) {
  std::string s = serialize_graph(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

inline std::vector<WeightedGraph> exhaustive_connected(std::size_t max_n) {
  std::vector<WeightedGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : gen::connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

inline std::vector<WeightedGraph> random_loopy(const Config& cfg, std::uint64_t salt) {
  std::mt19937_64 rng(cfg.seed ^ salt);
  std::uniform_int_distribution<std::size_t> order(1, cfg.random_max_n);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::vector<WeightedGraph> out;
  for (std::size_t k = 0; k < cfg.random_samples; ++k) {
    std::size_t n = order(rng);
    out.push_back(gen::random_graph(n, density(rng), 0.3, rng));
  }
  return out;
}

struct FamilyMember {
  WeightedGraph graph;
  Family family;
  std::string label;
};

inline std::vector<FamilyMember> family_members(const Config& cfg) {
  std::vector<FamilyMember> out;
  for (std::size_t n = 1; n <= cfg.corona_base_max; ++n) {
    std::size_t idx = 0;
    for (const auto& h : gen::connected_graphs(n)) {
      out.push_back({corona(h), Family::corona, "corona n=" + std::to_string(n) + " #" + std::to_string(idx++)});
    }
  }
  for (std::size_t n = 2; n <= cfg.tree_max; ++n) {
    std::size_t idx = 0;
    for (const auto& t : gen::trees(n)) {
      out.push_back({stellate(t).graph, Family::stellated_tree,
                     "st(tree) n=" + std::to_string(n) + " #" + std::to_string(idx++)});
    }
  }
  return out;
}

inline std::vector<WeightedGraph> alkane_stellations(const Config& cfg) {
  std::vector<WeightedGraph> out;
  for (const auto& t : gen::alkane_trees(cfg.alkane_carbons)) out.push_back(stellate(t).graph);
  return out;
}

/// Random invertible loopy graphs paired with their exact inverses.
inline std::vector<std::pair<WeightedGraph, WeightedGraph>> reciprocity_pairs(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x5eedULL);
  std::uniform_int_distribution<std::size_t> order(1, cfg.random_max_n);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::vector<std::pair<WeightedGraph, WeightedGraph>> out;
  while (out.size() < cfg.reciprocity_samples) {
    WeightedGraph g = gen::random_graph(order(rng), density(rng), 0.3, rng);
    if (determinant(adjacency_matrix(g)) == 0) continue;
    WeightedGraph inv = oracle_inverse(g);
    out.emplace_back(std::move(g), std::move(inv));
  }
  return out;
}

inline std::vector<WeightedGraph> bipartite_samples(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0xb1ULL);
  std::uniform_int_distribution<std::size_t> order(2, cfg.random_max_n);
  std::uniform_real_distribution<double> density(0.2, 1.0);
  std::vector<WeightedGraph> out;
  for (std::size_t k = 0; k < cfg.bipartite_samples; ++k) {
    std::size_t n = order(rng);
    std::size_t left = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    out.push_back(gen::random_bipartite(n, left, density(rng), rng));
  }
  return out;
}

}  // namespace detail

/// det_via_sachs against Bareiss on every connected graph up to max_n (plus
/// the independent unweighted recurrence) and on random weighted loopy graphs.
inline CheckResult determinant_equivalence(const Config& cfg) {
  CheckResult r{"determinant: Sachs expansion == exact elimination"};
  for (const auto& g : detail::exhaustive_connected(cfg.max_n)) {
    ++r.cases;
    Rational exact = determinant(adjacency_matrix(g));
    if (det_via_sachs(g) != exact || det_unweighted_check(g) != exact) {
      r.fail("mismatch on " + detail::describe(g));
    }
  }
  for (const auto& g : detail::random_loopy(cfg, 0xde7ULL)) {
    ++r.cases;
    if (det_via_sachs(g) != determinant(adjacency_matrix(g))) r.fail("mismatch on " + detail::describe(g));
  }
  return r;
}

/// structural_inverse against the Gauss-Jordan inverse on every invertible
/// graph of the determinant suite, plus A * A^-1 = I.
inline CheckResult inverse_equivalence(const Config& cfg) {
  CheckResult r{"inverse: path-sum formula == exact matrix inverse"};
  auto check = [&](const WeightedGraph& g) {
    ExactMatrix a = adjacency_matrix(g);
    if (determinant(a) == 0) return;
    ++r.cases;
    WeightedGraph structural = structural_inverse(g);
    if (structural != oracle_inverse(g)) {
      r.fail("mismatch on " + detail::describe(g));
      return;
    }
    if (a * adjacency_matrix(structural) != ExactMatrix::identity(g.order())) {
      r.fail("A * A^-1 != I on " + detail::describe(g));
    }
  };
  for (const auto& g : detail::exhaustive_connected(cfg.max_n)) check(g);
  for (const auto& g : detail::random_loopy(cfg, 0xde7ULL)) check(g);
  return r;
}

/// Pendant-reduction decision against the enumeration count on all connected graphs.
inline CheckResult unique_sachs_equivalence(const Config& cfg) {
  CheckResult r{"unique Sachs: pendant reduction <=> exactly one enumerated subgraph"};
  for (const auto& g : detail::exhaustive_connected(cfg.max_n)) {
    ++r.cases;
    UniqueSachsResult u = has_unique_sachs(g);
    std::vector<SachsSubgraph> all = enumerate_sachs(g);
    if (u.unique != (all.size() == 1)) {
      r.fail("decision differs from count " + std::to_string(all.size()) + " on " + detail::describe(g));
    } else if (u.unique && *u.witness != all.front()) {
      r.fail("witness differs from the enumerated subgraph on " + detail::describe(g));
    }
  }
  return r;
}

/// st(h) has a perfect matching, unique exactly when h is a tree.
inline CheckResult stellation_matchings(const Config& cfg) {
  CheckResult r{"stellation: perfect matching exists, unique <=> tree"};
  for (std::size_t n = 2; n <= cfg.stellation_base_max; ++n) {
    for (const auto& h : gen::connected_graphs(n)) {
      ++r.cases;
      Stellation st = stellate(h);
      std::size_t count = count_perfect_matchings(st.graph, 2);
      if (count == 0) r.fail("no perfect matching in st of " + detail::describe(h));
      if ((count == 1) != is_tree(h)) r.fail("uniqueness disagrees with tree-ness for " + detail::describe(h));
    }
  }
  return r;
}

/// Closed-form signed inverses of stellated trees and coronas against the
/// exact inverse under random signatures; coronas must also be self-invertible
/// with the core/pendant swap as a valid witness.
inline CheckResult closed_form_inverses(const Config& cfg) {
  CheckResult r{"closed forms: stellated-tree and corona inverses == exact inverse"};
  std::mt19937_64 rng(cfg.seed ^ 0xc1f0ULL);
  for (std::size_t n = 2; n <= cfg.tree_max; ++n) {
    for (const auto& t : gen::trees(n)) {
      WeightedGraph st = stellate(t).graph;
      for (std::size_t k = 0; k < cfg.signatures; ++k) {
        ++r.cases;
        SignedGraph sg(gen::random_signature(st, rng));
        if (stellated_tree_inverse(sg).graph() != oracle_inverse(sg.graph())) {
          r.fail("stellated-tree inverse mismatch on " + detail::describe(sg.graph()));
        }
      }
    }
  }
  for (std::size_t n = 1; n <= cfg.corona_base_max; ++n) {
    for (const auto& h : gen::connected_graphs(n)) {
      WeightedGraph c = corona(h);
      CoronaStructure cs = *recognize_corona(c);
      for (std::size_t k = 0; k < cfg.signatures; ++k) {
        ++r.cases;
        SignedGraph sg(gen::random_signature(c, rng));
        WeightedGraph inv = corona_inverse(sg).graph();
        if (inv != oracle_inverse(sg.graph())) r.fail("corona inverse mismatch on " + detail::describe(sg.graph()));
        if (!is_self_invertible(sg).self_invertible || !is_isomorphism(c, inv, corona_swap(cs))) {
          r.fail("corona not self-invertible via the swap: " + detail::describe(sg.graph()));
        }
      }
    }
  }
  return r;
}

/// Hand-checkable determinants and inverses.
inline CheckResult fixed_values() {
  CheckResult r{"fixed values: det(C3)=2, det(C4)=0, det(K2)=-1, inverse(P4), inverse(C3) diagonal"};
  auto expect = [&](bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) r.fail(what);
  };
  expect(det_via_sachs(gen::cycle(3)) == 2, "det(C3) != 2");
  expect(det_via_sachs(gen::cycle(4)) == 0, "det(C4) != 0");
  expect(det_via_sachs(gen::path(2)) == -1, "det(K2) != -1");

  WeightedGraph p4_inv(4);
  p4_inv.add_edge(0, 1, 1);
  p4_inv.add_edge(2, 3, 1);
  p4_inv.add_edge(0, 3, -1);
  expect(structural_inverse(gen::path(4)) == p4_inv, "structural inverse(P4)");
  expect(oracle_inverse(gen::path(4)) == p4_inv, "oracle inverse(P4)");

  WeightedGraph c3_inv = structural_inverse(gen::cycle(3));
  bool diag = true;
  for (VertexId v = 0; v < 3; ++v) diag = diag && c3_inv.weight_or_zero(v, v) == ratio(-1, 2);
  expect(diag, "inverse(C3) diagonal != -1/2");
  expect(c3_inv == oracle_inverse(gen::cycle(3)), "inverse(C3) structural != oracle");
  return r;
}

/// Every corona and stellated tree in range splits with no eigenvalue in the zero band.
inline CheckResult family_split(const Config& cfg) {
  CheckResult r{"split: coronas and stellated trees split about the origin"};
  for (const auto& m : detail::family_members(cfg)) {
    ++r.cases;
    Spectrum s = spectrum_of(m.graph);
    if (near_zero_count(s) != 0) r.fail("NearZero eigenvalue in " + m.label);
    if (!spectrum_splits(s)) r.fail("no split for " + m.label);
    if (!split_certificate(SignedGraph(m.graph))) r.fail("no combinatorial certificate for " + m.label);
  }
  return r;
}

/// -1 <= lambda_L < 0 < lambda_H <= 1 (closed ends to 1e-7) on the same families.
inline CheckResult family_median_bounds(const Config& cfg) {
  CheckResult r{"median bounds: -1 <= lambda_L < 0 < lambda_H <= 1"};
  for (const auto& m : detail::family_members(cfg)) {
    ++r.cases;
    if (!check_median_bounds(m.graph, m.family, kBoundTolerance)) {
      MedianReport rep = median_eigenvalues(spectrum_of(m.graph));
      std::ostringstream why;
      why.precision(10);
      why << m.label << ": lambda_H=" << rep.lambda_H << " lambda_L=" << rep.lambda_L;
      r.fail(why.str());
    }
  }
  return r;
}

/// Stellated alkane skeletons: gap <= 1.3 and lambda_L >= -3/10.
inline CheckResult alkane_gap(const Config& cfg) {
  CheckResult r{"alkanes: HOMO-LUMO gap <= 1.3 and lambda_L >= -3/10"};
  std::ostringstream failures;
  failures.precision(10);
  for (const auto& g : detail::alkane_stellations(cfg)) {
    ++r.cases;
    MedianReport rep = median_eigenvalues(spectrum_of(g));
    bool ok = rep.gap <= 1.3 && rep.lambda_L >= -0.3 - kBoundTolerance;
    if (!ok) {
      failures << "[st n=" << g.order() << " gap=" << rep.gap << " lambda_L=" << rep.lambda_L << "] ";
      r.passed = false;
    }
  }
  r.detail = failures.str();
  return r;
}

/// Spectrum of G^-1 equals the reciprocals of the spectrum of G, entry by entry
/// after sorting, to 1e-7 relative to max(1, |value|).
inline CheckResult reciprocity(const Config& cfg) {
  CheckResult r{"reciprocity: spectrum(G^-1) == 1 / spectrum(G)"};
  for (const auto& [g, inv] : detail::reciprocity_pairs(cfg)) {
    ++r.cases;
    Spectrum s = spectrum_of(g);
    Spectrum t = spectrum_of(inv);
    std::vector<double> recip;
    for (double x : s.values) recip.push_back(1.0 / x);
    std::sort(recip.begin(), recip.end(), std::greater<>());
    for (std::size_t k = 0; k < recip.size(); ++k) {
      if (std::abs(recip[k] - t.values[k]) > kReciprocityTolerance * std::max(1.0, std::abs(recip[k]))) {
        r.fail("reciprocal spectrum mismatch on " + detail::describe(g));
        break;
      }
    }
  }
  return r;
}

/// Weighted bipartite graphs have spectra symmetric about 0; so does the
/// signed two-triangle graph.
inline CheckResult bipartite_symmetry(const Config& cfg) {
  CheckResult r{"symmetry: weighted bipartite graphs and the two-triangle graph"};
  for (const auto& g : detail::bipartite_samples(cfg)) {
    ++r.cases;
    if (!is_symmetric_spectrum(spectrum_of(g), kSymmetryTolerance)) r.fail("asymmetric: " + detail::describe(g));
  }
  ++r.cases;
  if (!is_symmetric_spectrum(spectrum_of(gen::two_triangles()), kSymmetryTolerance)) {
    r.fail("two-triangle graph is not symmetric");
  }
  return r;
}

/// Residual, trace and determinant-product checks of a single spectrum.
inline bool eigen_healthy(const WeightedGraph& g, std::string* why = nullptr) {
  ExactMatrix exact = adjacency_matrix(g);
  FloatMatrix a = to_float(exact);
  Spectrum s = eigenvalues(a);
  const double scale = std::max(1.0, frobenius_norm(a));
  auto complain = [&](const std::string& what) {
    if (why) *why = what + " on " + detail::describe(g);
    return false;
  };
  if (max_residual(a, s) > 1e-9 * scale) return complain("residual");
  double trace = 0, sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) trace += a(i, i);
  for (double x : s.values) sum += x;
  if (std::abs(trace - sum) > 1e-8 * static_cast<double>(std::max<std::size_t>(1, a.dim()))) return complain("trace");
  Rational det = g.order() <= kEnumerationCap ? det_via_sachs(g) : determinant(exact);
  if (det != 0) {
    double product = 1;
    for (double x : s.values) product *= x;
    double d = det.get_d();
    if (std::abs(product - d) > 1e-6 * std::abs(d)) return complain("determinant product");
  }
  return true;
}

/// Eigensolver health over every matrix used by the spectral checks.
inline CheckResult eigensolver_health(const Config& cfg) {
  CheckResult r{"eigensolver: residual, trace and determinant-product checks"};
  auto check = [&](const WeightedGraph& g) {
    ++r.cases;
    std::string why;
    if (!eigen_healthy(g, &why)) r.fail(why);
  };
  for (const auto& m : detail::family_members(cfg)) check(m.graph);
  for (const auto& g : detail::alkane_stellations(cfg)) check(g);
  for (const auto& [g, inv] : detail::reciprocity_pairs(cfg)) {
    check(g);
    check(inv);
  }
  for (const auto& g : detail::bipartite_samples(cfg)) check(g);
  check(gen::two_triangles());
  return r;
}

/// The oracle-equivalence and family suites behind `graphinv verify`.
inline std::vector<CheckResult> run_invariant_suites(const Config& cfg) {
  return {determinant_equivalence(cfg), inverse_equivalence(cfg), unique_sachs_equivalence(cfg),
          stellation_matchings(cfg),        closed_form_inverses(cfg), fixed_values(),
          family_split(cfg),            family_median_bounds(cfg), reciprocity(cfg),
          bipartite_symmetry(cfg),      eigensolver_health(cfg)};
}

}  // namespace graphinv::verify
