#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "graphinv/error.hpp"
#include "graphinv/graph.hpp"
#include "graphinv/matrix.hpp"
#include "graphinv/sachs.hpp"

namespace graphinv {

enum class InverseMethod { structural, oracle, both };

struct InverseReport {
  WeightedGraph inverse;
  InverseMethod method = InverseMethod::oracle;
  /// Set only for InverseMethod::both.
  std::optional<bool> agreement;
};

/// An i-j path whose complement G - V(P) still has a Sachs subgraph.
struct AdmissiblePath {
  std::vector<VertexId> vertices;
  /// Sachs subgraphs of G - V(P), in the vertex ids of G. The empty complement
  /// contributes one empty subgraph.
  std::vector<SachsSubgraph> complement_sachs;
};

namespace detail {

/// Visits every simple path from i to j as a vertex list.
template <typename Visit>
void for_each_path(const WeightedGraph& g, VertexId i, VertexId j, Visit&& visit) {
  std::vector<VertexId> path{i};
  std::uint32_t on_path = std::uint32_t{1} << i;
  auto dfs = [&](auto&& self, VertexId x) -> void {
    for (VertexId y : g.neighbors(x)) {
      if ((on_path >> y) & 1U) continue;
      path.push_back(y);
      if (y == j) {
        visit(path, on_path | (std::uint32_t{1} << y));
      } else {
        on_path |= std::uint32_t{1} << y;
        self(self, y);
        on_path &= ~(std::uint32_t{1} << y);
      }
      path.pop_back();
    }
  };
  dfs(dfs, i);
}

inline void check_pair(const WeightedGraph& g, VertexId i, VertexId j) {
  if (i >= g.order() || j >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "path endpoint");
  if (i == j) throw Error(ErrorCode::IndexOutOfRange, "admissible paths need distinct endpoints");
}

}  // namespace detail

/// Oracle route: Gauss-Jordan inverse of the adjacency matrix read back as a graph.
inline WeightedGraph oracle_inverse(const WeightedGraph& g) {
  return graph_from_matrix(invert_matrix_exact(adjacency_matrix(g)));
}

inline std::vector<AdmissiblePath> enumerate_admissible_paths(const WeightedGraph& g, VertexId i, VertexId j) {
  detail::check_enumeration_cap(g);
  detail::check_pair(g, i, j);
  const std::uint32_t full = detail::full_mask(g.order());
  std::vector<AdmissiblePath> out;
  detail::for_each_path(g, i, j, [&](const std::vector<VertexId>& path, std::uint32_t used) {
    AdmissiblePath p;
    detail::for_each_sachs(g, full & ~used, [&](const SachsSubgraph& s) {
      SachsSubgraph copy = s;
      copy.canonicalize();
      p.complement_sachs.push_back(std::move(copy));
    });
    if (p.complement_sachs.empty()) return;
    std::sort(p.complement_sachs.begin(), p.complement_sachs.end());
    p.vertices = path;
    out.push_back(std::move(p));
  });
  return out;
}

/// Inverse assembled entry by entry from Sachs subgraphs:
/// off-diagonal entries sum w(P) (-1)^|E(P)| times the Sachs determinant of
/// G - V(P) over i-j paths, diagonal entries are det(G - i); all divided by det(G).
inline WeightedGraph structural_inverse(const WeightedGraph& g) {
  detail::check_enumeration_cap(g);
  const std::size_t n = g.order();
  const std::uint32_t full = detail::full_mask(n);
  std::unordered_map<std::uint32_t, Rational> memo;
  auto sachs_det = [&](std::uint32_t vertices) -> const Rational& {
    auto it = memo.find(vertices);
    if (it == memo.end()) it = memo.emplace(vertices, det_via_sachs_on(g, vertices)).first;
    return it->second;
  };

  const Rational det = sachs_det(full);
  if (det == 0) throw Error(ErrorCode::Singular, "Sachs determinant is zero");

  WeightedGraph inv(n);
  for (VertexId i = 0; i < n; ++i) {
    Rational diag = sachs_det(full & ~(std::uint32_t{1} << i)) / det;
    if (diag != 0) inv.add_edge(i, i, diag);
    for (VertexId j = i + 1; j < n; ++j) {
      Rational sum = 0;
      detail::for_each_path(g, i, j, [&](const std::vector<VertexId>& path, std::uint32_t used) {
        const Rational& rest = sachs_det(full & ~used);
        if (rest == 0) return;
        Rational term = product_of_weights(g, path, false) * rest;
        // |E(P)| = |V(P)| - 1 and the complement's own sign is already in `rest`.
        if ((path.size() - 1) % 2 == 1) term = -term;
        sum += term;
      });
      if (sum != 0) inv.add_edge(i, j, sum / det);
    }
  }
  return inv;
}

/// Inverse graph by the requested route. With InverseMethod::both the two
/// routes must agree exactly or Disagreement is thrown.
inline InverseReport invert_graph(const WeightedGraph& g, InverseMethod method = InverseMethod::oracle) {
  InverseReport report;
  report.method = method;
  switch (method) {
    case InverseMethod::oracle:
      report.inverse = oracle_inverse(g);
      break;
    case InverseMethod::structural:
      report.inverse = structural_inverse(g);
      break;
    case InverseMethod::both: {
      report.inverse = oracle_inverse(g);
      bool agree = structural_inverse(g) == report.inverse;
      report.agreement = agree;
      if (!agree) throw Error(ErrorCode::Disagreement, "structural inverse differs from the matrix inverse");
      break;
    }
  }
  return report;
}

/// The inverse has no loops, i.e. every G - i is singular.
inline bool is_simply_invertible(const WeightedGraph& g) {
  detail::check_enumeration_cap(g);
  const std::uint32_t full = detail::full_mask(g.order());
  if (det_via_sachs_on(g, full) == 0) throw Error(ErrorCode::Singular, "Sachs determinant is zero");
  for (VertexId i = 0; i < g.order(); ++i) {
    if (det_via_sachs_on(g, full & ~(std::uint32_t{1} << i)) != 0) return false;
  }
  return true;
}

/// For a simple signed graph with a unique Sachs subgraph: the inverse is
/// integral iff that subgraph is a perfect matching. The structural answer is
/// cross-checked against the matrix inverse.
inline bool has_integral_inverse(const SignedGraph& sg) {
  const WeightedGraph& g = sg.graph();
  if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "integral-inverse test expects a simple graph");
  UniqueSachsResult u = has_unique_sachs(g);
  if (!u.unique) throw Error(ErrorCode::NotUniqueSachs, "graph has zero or several Sachs subgraphs");
  bool structural = u.witness->is_perfect_matching();
  WeightedGraph inv = oracle_inverse(g);
  bool oracle = std::all_of(inv.edges().begin(), inv.edges().end(),
                            [](const auto& kv) { return is_integer(kv.second); });
  if (structural != oracle) {
    throw Error(ErrorCode::Disagreement, "integrality of the matrix inverse contradicts the Sachs witness");
  }
  return structural;
}

}  // namespace graphinv
