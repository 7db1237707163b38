#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphinv/error.hpp"
#include "graphinv/graph.hpp"

namespace graphinv {

inline constexpr std::size_t kIsomorphismCap = 16;

namespace detail {

struct IsoSearch {
  const WeightedGraph& a;
  const WeightedGraph& b;
  std::vector<std::uint64_t> adj_a, adj_b;
  std::vector<std::uint64_t> key_a, key_b;  // degree, loop flag and sorted neighbour degrees
  std::vector<VertexId> order;              // vertices of `a` in assignment order
  std::vector<VertexId> phi;
  std::vector<bool> used;

  IsoSearch(const WeightedGraph& g1, const WeightedGraph& g2) : a(g1), b(g2) {
    const std::size_t n = a.order();
    adj_a.resize(n);
    adj_b.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      adj_a[v] = a.neighbor_mask(v);
      adj_b[v] = b.neighbor_mask(v);
    }
    key_a = keys(a);
    key_b = keys(b);
    phi.assign(n, n);
    used.assign(n, false);
  }

  static std::vector<std::uint64_t> keys(const WeightedGraph& g) {
    std::vector<std::uint64_t> out(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
      std::vector<std::size_t> nd;
      for (VertexId u : g.neighbors(v)) nd.push_back(g.neighbors(u).size());
      std::sort(nd.begin(), nd.end());
      std::uint64_t h = g.neighbors(v).size() * 2 + (g.has_loop(v) ? 1 : 0);
      for (std::size_t d : nd) h = h * 31 + d + 1;
      out[v] = h;
    }
    return out;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    VertexId x = order[depth];
    for (VertexId y = 0; y < b.order(); ++y) {
      if (used[y] || key_a[x] != key_b[y]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        VertexId px = order[k];
        bool ea = (adj_a[x] >> px) & 1U;
        bool eb = (adj_b[y] >> phi[px]) & 1U;
        ok = ea == eb;
      }
      if (!ok) continue;
      phi[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
    }
    phi[x] = a.order();
    return false;
  }
};

}  // namespace detail

/// Isomorphism of the underlying graphs (weights ignored, loops respected).
/// Returns phi with {i,j} in E(g1) iff {phi[i],phi[j]} in E(g2).
inline std::optional<std::vector<VertexId>> is_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2) {
  if (g1.order() > kIsomorphismCap || g2.order() > kIsomorphismCap) {
    throw Error(ErrorCode::TooLarge, "isomorphism is limited to 16 vertices");
  }
  if (g1.order() != g2.order() || g1.size() != g2.size() || g1.loop_count() != g2.loop_count()) {
    return std::nullopt;
  }
  detail::IsoSearch search(g1, g2);
  auto ka = search.key_a, kb = search.key_b;
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return std::nullopt;

  // Assign in BFS order from high-degree roots so each new vertex is constrained early.
  const std::size_t n = g1.order();
  std::vector<bool> placed(n, false);
  std::vector<VertexId> by_degree(n);
  for (VertexId v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](VertexId x, VertexId y) { return g1.degree(x) > g1.degree(y); });
  for (VertexId root : by_degree) {
    if (placed[root]) continue;
    placed[root] = true;
    search.order.push_back(root);
    for (std::size_t k = search.order.size() - 1; k < search.order.size(); ++k) {
      for (VertexId y : g1.neighbors(search.order[k])) {
        if (!placed[y]) {
          placed[y] = true;
          search.order.push_back(y);
        }
      }
    }
  }
  if (!search.extend(0)) return std::nullopt;
  return search.phi;
}

/// Checks that phi is an isomorphism between the underlying graphs.
inline bool is_isomorphism(const WeightedGraph& g1, const WeightedGraph& g2, const std::vector<VertexId>& phi) {
  if (g1.order() != g2.order() || phi.size() != g1.order() || g1.size() != g2.size()) return false;
  std::vector<bool> hit(g2.order(), false);
  for (VertexId y : phi) {
    if (y >= g2.order() || hit[y]) return false;
    hit[y] = true;
  }
  for (const auto& [e, w] : g1.edges()) {
    if (!g2.has_edge(phi[e.u], phi[e.v])) return false;
  }
  return true;
}

}  // namespace graphinv
