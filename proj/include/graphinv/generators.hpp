#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "graphinv/graph.hpp"
#include "graphinv/isomorphism.hpp"

namespace graphinv::gen {

inline WeightedGraph path(std::size_t n) {
  WeightedGraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, 1);
  return g;
}

inline WeightedGraph cycle(std::size_t n) {
  WeightedGraph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0, 1);
  return g;
}

inline WeightedGraph star(std::size_t leaves) {
  WeightedGraph g(leaves + 1);
  for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v, 1);
  return g;
}

inline WeightedGraph complete(std::size_t n) {
  WeightedGraph g(n);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b, 1);
  return g;
}

/// Same edges with every weight set to w.
inline WeightedGraph with_uniform_weight(const WeightedGraph& g, const Rational& w) {
  WeightedGraph out(g.order());
  for (const auto& [e, old] : g.edges()) out.add_edge(e.u, e.v, w);
  return out;
}

namespace detail {

inline std::vector<std::uint64_t> invariant_key(const WeightedGraph& g) {
  std::vector<std::uint64_t> key;
  for (VertexId v = 0; v < g.order(); ++v) {
    std::vector<std::size_t> nd;
    for (VertexId u : g.neighbors(v)) nd.push_back(g.neighbors(u).size());
    std::sort(nd.begin(), nd.end());
    std::uint64_t h = g.neighbors(v).size();
    for (std::size_t d : nd) h = h * 37 + d + 1;
    key.push_back(h);
  }
  std::sort(key.begin(), key.end());
  key.push_back(g.size());
  return key;
}

}  // namespace detail

/// All simple unweighted graphs on n vertices, one per isomorphism class.
/// Built by adding a vertex to every class on n-1 vertices. Intended for n <= 8.
inline std::vector<WeightedGraph> all_graphs(std::size_t n) {
  if (n == 0) return {WeightedGraph(0)};
  std::vector<WeightedGraph> smaller = all_graphs(n - 1);
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;
  std::vector<WeightedGraph> out;
  for (const WeightedGraph& base : smaller) {
    for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
      WeightedGraph g(n);
      for (const auto& [e, w] : base.edges()) g.add_edge(e.u, e.v, 1);
      for (VertexId v = 0; v + 1 < n; ++v)
        if ((nbrs >> v) & 1U) g.add_edge(v, n - 1, 1);
      auto& bucket = buckets[detail::invariant_key(g)];
      bool seen = std::any_of(bucket.begin(), bucket.end(),
                              [&](std::size_t idx) { return is_isomorphic(out[idx], g).has_value(); });
      if (!seen) {
        bucket.push_back(out.size());
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

/// Connected simple graphs on n vertices up to isomorphism (1, 1, 2, 6, 21, 112, 853 for n = 1..7).
inline std::vector<WeightedGraph> connected_graphs(std::size_t n) {
  std::vector<WeightedGraph> out;
  for (auto& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

/// Trees on n vertices up to isomorphism.
inline std::vector<WeightedGraph> trees(std::size_t n) {
  std::vector<WeightedGraph> out;
  for (auto& g : connected_graphs(n))
    if (g.size() + 1 == n) out.push_back(std::move(g));
  return out;
}

/// Hydrogen-saturated alkane skeletons: every carbon tree on 1..max_carbons
/// vertices with maximum degree 4, padded with leaves so each carbon has degree 4.
inline std::vector<WeightedGraph> alkane_trees(std::size_t max_carbons) {
  std::vector<WeightedGraph> out;
  for (std::size_t c = 1; c <= max_carbons; ++c) {
    for (const WeightedGraph& skeleton : trees(c)) {
      bool fits = true;
      for (VertexId v = 0; v < c; ++v) fits = fits && skeleton.degree(v) <= 4;
      if (!fits) continue;
      std::size_t hydrogens = 0;
      for (VertexId v = 0; v < c; ++v) hydrogens += 4 - skeleton.degree(v);
      WeightedGraph g(c + hydrogens);
      for (const auto& [e, w] : skeleton.edges()) g.add_edge(e.u, e.v, 1);
      VertexId next = c;
      for (VertexId v = 0; v < c; ++v)
        for (std::size_t k = skeleton.degree(v); k < 4; ++k) g.add_edge(v, next++, 1);
      out.push_back(std::move(g));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

/// Nonzero rational in [-2, 2] with denominator at most 5.
inline Rational random_weight(std::mt19937_64& rng) {
  int den = std::uniform_int_distribution<int>(1, 5)(rng);
  int num = 0;
  while (num == 0) num = std::uniform_int_distribution<int>(-2 * den, 2 * den)(rng);
  return ratio(num, den);
}

/// Gives every edge an independent random sign.
inline WeightedGraph random_signature(const WeightedGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  WeightedGraph out(g.order());
  for (const auto& [e, w] : g.edges()) out.add_edge(e.u, e.v, coin(rng) ? 1 : -1);
  return out;
}

/// Replaces every weight by random_weight.
inline WeightedGraph random_weights(const WeightedGraph& g, std::mt19937_64& rng) {
  WeightedGraph out(g.order());
  for (const auto& [e, w] : g.edges()) out.add_edge(e.u, e.v, random_weight(rng));
  return out;
}

/// G(n, p) with loops (probability loop_p) and random rational weights.
inline WeightedGraph random_graph(std::size_t n, double p, double loop_p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p), loop(loop_p);
  WeightedGraph g(n);
  for (VertexId a = 0; a < n; ++a) {
    if (loop(rng)) g.add_edge(a, a, random_weight(rng));
    for (VertexId b = a + 1; b < n; ++b)
      if (edge(rng)) g.add_edge(a, b, random_weight(rng));
  }
  return g;
}

/// Random simple bipartite graph: vertices [0, left) vs [left, n), random weights.
inline WeightedGraph random_bipartite(std::size_t n, std::size_t left, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  WeightedGraph g(n);
  for (VertexId a = 0; a < left; ++a)
    for (VertexId b = left; b < n; ++b)
      if (edge(rng)) g.add_edge(a, b, random_weight(rng));
  return g;
}

/// Random tree on n vertices by attaching each new vertex to an earlier one.
inline WeightedGraph random_tree(std::size_t n, std::mt19937_64& rng) {
  WeightedGraph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<VertexId>(0, v - 1)(rng), v, 1);
  return g;
}

/// The five-vertex graph of two triangles sharing vertex 2 (0-based): triangle
/// 0-1-2 weighted +1, triangle 2-3-4 weighted -1. Its spectrum is symmetric
/// although it is not bipartite.
inline WeightedGraph two_triangles() {
  WeightedGraph g(5);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(0, 2, 1);
  g.add_edge(2, 3, -1);
  g.add_edge(3, 4, -1);
  g.add_edge(2, 4, -1);
  return g;
}

}  // namespace graphinv::gen
