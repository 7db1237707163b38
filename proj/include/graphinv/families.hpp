#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "graphinv/error.hpp"
#include "graphinv/graph.hpp"
#include "graphinv/inverse.hpp"
#include "graphinv/isomorphism.hpp"
#include "graphinv/sachs.hpp"

namespace graphinv {

// ---------------------------------------------------------------------------
// Stellated graphs
// ---------------------------------------------------------------------------

/// Correspondence between G and st(G).
struct StellationMap {
  /// clique_of[v]: vertices of st(G) replacing v, one per incident edge.
  std::vector<std::vector<VertexId>> clique_of;
  /// Edge uv of G -> the matching edge of st(G) that mirrors it.
  std::map<Edge, Edge> matching_edge;
  /// origin[x] = (v, e): vertex x of st(G) stands for v on its incident edge e.
  std::vector<std::pair<VertexId, Edge>> origin;
  /// Isolated vertices of G; they have no counterpart in st(G).
  std::vector<VertexId> isolated;
};

struct Stellation {
  WeightedGraph graph;
  StellationMap map;
};

/// Line graph of the once-subdivided G: each vertex v becomes a clique on the
/// pairs (v, e), e incident to v, and each edge uv becomes one matching edge.
/// All weights are +1. Vertex numbering follows sorted (v, e) order.
inline Stellation stellate(const WeightedGraph& g) {
  if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "stellation expects a simple graph");
  Stellation st;
  StellationMap& map = st.map;
  map.clique_of.resize(g.order());
  std::map<std::pair<VertexId, Edge>, VertexId> index;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).empty()) map.isolated.push_back(v);
    for (VertexId u : g.neighbors(v)) {
      Edge e(v, u);
      index.emplace(std::make_pair(v, e), map.origin.size());
      map.clique_of[v].push_back(map.origin.size());
      map.origin.emplace_back(v, e);
    }
  }
  st.graph = WeightedGraph(map.origin.size());
  for (const auto& clique : map.clique_of)
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) st.graph.add_edge(clique[a], clique[b], 1);
  for (const auto& [e, w] : g.edges()) {
    VertexId x = index.at({e.u, e});
    VertexId y = index.at({e.v, e});
    st.graph.add_edge(x, y, 1);
    map.matching_edge.emplace(e, Edge(x, y));
  }
  return st;
}

/// Result of recognising a graph as st(T) for a tree T on >= 2 vertices.
struct StellatedTree {
  WeightedGraph tree;
  /// The unique perfect matching, sorted.
  std::vector<Edge> matching;
  /// cliques[t]: vertices of the clique that contracts to tree vertex t.
  std::vector<std::vector<VertexId>> cliques;
};

/// Recognises st(T) constructively: the graph must have a unique Sachs subgraph
/// that is a perfect matching M, G - M must be a disjoint union of cliques, and
/// contracting those cliques must give a tree. Signs are ignored.
inline std::optional<StellatedTree> recognize_stellated_tree(const WeightedGraph& g) {
  if (!g.is_simple() || g.order() < 2) return std::nullopt;
  UniqueSachsResult u = has_unique_sachs(g);
  if (!u.unique || !u.witness->is_perfect_matching()) return std::nullopt;

  StellatedTree out;
  out.matching = u.witness->matching;
  std::vector<VertexId> mate(g.order());
  for (const Edge& e : out.matching) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  WeightedGraph rest(g.order());
  for (const auto& [e, w] : g.edges())
    if (mate[e.u] != e.v) rest.add_edge(e.u, e.v, 1);

  out.cliques = connected_components(rest);
  std::vector<std::size_t> clique_id(g.order());
  for (std::size_t c = 0; c < out.cliques.size(); ++c) {
    const auto& members = out.cliques[c];
    for (VertexId v : members) {
      clique_id[v] = c;
      if (rest.neighbors(v).size() + 1 != members.size()) return std::nullopt;
    }
  }
  out.tree = WeightedGraph(out.cliques.size());
  for (const Edge& e : out.matching) {
    std::size_t a = clique_id[e.u], b = clique_id[e.v];
    if (a == b || out.tree.has_edge(a, b)) return std::nullopt;
    out.tree.add_edge(a, b, 1);
  }
  if (!is_tree(out.tree) || out.tree.order() < 2) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------
// Corona graphs
// ---------------------------------------------------------------------------

/// corona(H): vertices 0..n-1 carry H, vertex n+i is the pendant partner of i.
inline WeightedGraph corona(const WeightedGraph& h) {
  if (!h.is_simple()) throw Error(ErrorCode::NotSimple, "corona expects a simple graph");
  const std::size_t n = h.order();
  WeightedGraph g(2 * n);
  for (const auto& [e, w] : h.edges()) g.add_edge(e.u, e.v, 1);
  for (VertexId i = 0; i < n; ++i) g.add_edge(i, n + i, 1);
  return g;
}

/// Pairs (v_i, u_i) of a corona graph, ordered by v_i.
struct CoronaStructure {
  std::vector<VertexId> core;
  std::vector<VertexId> pendant;
};

/// Finds the core/pendant split of a corona graph under any labelling. K2
/// components take their lower vertex as core.
inline std::optional<CoronaStructure> recognize_corona(const WeightedGraph& g) {
  const std::size_t n = g.order();
  if (!g.is_simple() || n == 0 || n % 2 == 1) return std::nullopt;
  std::vector<VertexId> partner(n, n);
  std::vector<bool> is_pendant(n, false);
  for (VertexId x = 0; x < n; ++x) {
    if (g.neighbors(x).size() != 1) continue;
    VertexId y = g.neighbors(x).front();
    if (g.neighbors(y).size() == 1 && y < x) continue;  // K2 component, x becomes the pendant of y below
    if (g.neighbors(y).size() == 1 && x < y) {
      is_pendant[y] = true;
      partner[x] = y;
      partner[y] = x;
      continue;
    }
    if (partner[y] != n) return std::nullopt;  // two leaves on one core vertex
    is_pendant[x] = true;
    partner[x] = y;
    partner[y] = x;
  }
  CoronaStructure out;
  for (VertexId x = 0; x < n; ++x) {
    if (partner[x] == n) return std::nullopt;
    if (!is_pendant[x]) {
      out.core.push_back(x);
      out.pendant.push_back(partner[x]);
    }
  }
  if (out.core.size() * 2 != n) return std::nullopt;
  return out;
}

/// The u_i <-> v_i swap, as a vertex map.
inline std::vector<VertexId> corona_swap(const CoronaStructure& c) {
  std::vector<VertexId> phi(c.core.size() * 2);
  for (std::size_t i = 0; i < c.core.size(); ++i) {
    phi[c.core[i]] = c.pendant[i];
    phi[c.pendant[i]] = c.core[i];
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Alternating paths and closed-form inverses
// ---------------------------------------------------------------------------

struct AlternatingPath {
  std::vector<VertexId> vertices;
  /// Number of non-matching edges on the path.
  std::size_t tau = 0;
};

namespace detail {

inline std::vector<VertexId> mates_of(const WeightedGraph& g, const std::vector<Edge>& m) {
  if (!is_perfect_matching(g, m)) throw Error(ErrorCode::NotPerfectMatching, "matching is not perfect");
  std::vector<VertexId> mate(g.order());
  for (const Edge& e : m) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

/// Visits every M-alternating path that starts at `source` with its matching
/// edge and ends with a matching edge. Return false from `visit` to stop.
template <typename Visit>
void for_each_alternating_path(const WeightedGraph& g, const std::vector<VertexId>& mate, VertexId source,
                               Visit&& visit) {
  std::vector<VertexId> path{source, mate[source]};
  std::vector<bool> on(g.order(), false);
  on[source] = on[mate[source]] = true;
  bool stop = false;
  auto grow = [&](auto&& self) -> void {
    if (!visit(path)) {
      stop = true;
      return;
    }
    VertexId tail = path.back();
    for (VertexId y : g.neighbors(tail)) {
      if (stop) return;
      if (y == mate[tail] || on[y] || on[mate[y]]) continue;
      path.push_back(y);
      path.push_back(mate[y]);
      on[y] = on[mate[y]] = true;
      self(self);
      on[y] = on[mate[y]] = false;
      path.pop_back();
      path.pop_back();
    }
  };
  grow(grow);
}

}  // namespace detail

/// The first (in ascending-neighbour order) M-alternating i-j path; for the
/// unique perfect matching of a stellated tree or corona graph it is the only one.
inline std::optional<AlternatingPath> alternating_path_between(const WeightedGraph& g, const std::vector<Edge>& m,
                                                               VertexId i, VertexId j) {
  std::vector<VertexId> mate = detail::mates_of(g, m);
  if (i >= g.order() || j >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "path endpoint");
  if (i == j) return std::nullopt;
  std::optional<AlternatingPath> found;
  detail::for_each_alternating_path(g, mate, i, [&](const std::vector<VertexId>& path) {
    if (path.back() != j) return true;
    found = AlternatingPath{path, path.size() / 2 - 1};
    return false;
  });
  return found;
}

/// Closed-form inverse of a signed st(T): ij is an edge iff an M-alternating
/// path joins i and j, with sign (-1)^tau(i,j) times the path's sign product.
inline SignedGraph stellated_tree_inverse(const SignedGraph& sg) {
  const WeightedGraph& g = sg.graph();
  std::optional<StellatedTree> st = recognize_stellated_tree(g);
  if (!st) throw Error(ErrorCode::NotStellatedTree, "graph is not the stellation of a tree");
  std::vector<VertexId> mate = detail::mates_of(g, st->matching);
  WeightedGraph inv(g.order());
  for (VertexId i = 0; i < g.order(); ++i) {
    detail::for_each_alternating_path(g, mate, i, [&](const std::vector<VertexId>& path) {
      VertexId j = path.back();
      if (j > i) {
        std::size_t tau = path.size() / 2 - 1;
        int sign = (tau % 2 == 0) ? 1 : -1;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) sign *= sg.sign(path[k], path[k + 1]);
        inv.add_edge(i, j, sign);
      }
      return true;
    });
  }
  return SignedGraph(std::move(inv));
}

/// Closed-form inverse of a signed corona graph: matching edges keep their sign,
/// u_i u_j gets -sigma(u_i v_i) sigma(v_i v_j) sigma(v_j u_j) for v_i v_j in H.
inline SignedGraph corona_inverse(const SignedGraph& sg) {
  const WeightedGraph& g = sg.graph();
  std::optional<CoronaStructure> c = recognize_corona(g);
  if (!c) throw Error(ErrorCode::NotCorona, "graph is not a corona graph");
  WeightedGraph inv(g.order());
  const std::size_t k = c->core.size();
  for (std::size_t a = 0; a < k; ++a) {
    VertexId va = c->core[a], ua = c->pendant[a];
    inv.add_edge(va, ua, sg.sign(va, ua));
    for (std::size_t b = a + 1; b < k; ++b) {
      VertexId vb = c->core[b], ub = c->pendant[b];
      if (!g.has_edge(va, vb)) continue;
      inv.add_edge(ua, ub, -sg.sign(ua, va) * sg.sign(va, vb) * sg.sign(vb, ub));
    }
  }
  return SignedGraph(std::move(inv));
}

struct SelfInverseResult {
  bool self_invertible = false;
  std::optional<std::vector<VertexId>> witness;
};

/// Whether the underlying graph of the inverse is isomorphic to that of g.
/// The inverse must itself be a signed graph.
inline SelfInverseResult is_self_invertible(const SignedGraph& sg) {
  const WeightedGraph& g = sg.graph();
  if (g.order() > kIsomorphismCap) throw Error(ErrorCode::TooLarge, "isomorphism is limited to 16 vertices");
  WeightedGraph inv = oracle_inverse(g);
  if (!inv.is_signed()) throw Error(ErrorCode::NotSigned, "inverse has entries outside {0,-1,+1}");
  SelfInverseResult out;
  out.witness = is_isomorphic(g, inv);
  out.self_invertible = out.witness.has_value();
  return out;
}

}  // namespace graphinv
