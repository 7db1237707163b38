#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "graphinv/error.hpp"
#include "graphinv/graph.hpp"
#include "graphinv/rational.hpp"

namespace graphinv {

/// Enumeration-based routines refuse graphs above this order.
inline constexpr std::size_t kEnumerationCap = 24;

/// Spanning subgraph whose components are cycles (length >= 3), single edges and loops.
struct SachsSubgraph {
  /// Each cycle starts at its smallest vertex, followed by the smaller of its two neighbours.
  std::vector<std::vector<VertexId>> cycles;
  std::vector<Edge> matching;
  std::vector<VertexId> loops;

  std::size_t edge_count() const {
    std::size_t e = matching.size() + loops.size();
    for (const auto& c : cycles) e += c.size();
    return e;
  }
  bool is_perfect_matching() const { return cycles.empty() && loops.empty(); }

  void canonicalize() {
    std::sort(cycles.begin(), cycles.end());
    std::sort(matching.begin(), matching.end());
    std::sort(loops.begin(), loops.end());
  }

  friend auto operator<=>(const SachsSubgraph&, const SachsSubgraph&) = default;
};

/// Signed contribution 2^|C| w(C u L) w(M)^2 (-1)^(|C|+|L|+|E(S)|) of one Sachs subgraph.
inline Rational sachs_term(const WeightedGraph& g, const SachsSubgraph& s) {
  Rational term = 1;
  for (const auto& c : s.cycles) term *= 2 * product_of_weights(g, c, true);
  for (VertexId v : s.loops) term *= *g.find(v, v);
  for (const Edge& e : s.matching) {
    const Rational& w = *g.find(e.u, e.v);
    term *= w * w;
  }
  if ((s.cycles.size() + s.loops.size() + s.edge_count()) % 2 == 1) term = -term;
  return term;
}

/// Disjointness, spanning and edge-existence checks for a claimed Sachs subgraph.
inline bool is_valid_sachs(const WeightedGraph& g, const SachsSubgraph& s) {
  std::vector<int> hits(g.order(), 0);
  auto touch = [&](VertexId v) {
    if (v >= g.order()) return false;
    return ++hits[v] == 1;
  };
  for (const auto& c : s.cycles) {
    if (c.size() < 3) return false;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!touch(c[k]) || !g.has_edge(c[k], c[(k + 1) % c.size()]) || c[k] == c[(k + 1) % c.size()]) {
        return false;
      }
    }
  }
  for (const Edge& e : s.matching) {
    if (e.is_loop() || !touch(e.u) || !touch(e.v) || !g.has_edge(e.u, e.v)) return false;
  }
  for (VertexId v : s.loops) {
    if (!touch(v) || !g.has_loop(v)) return false;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace detail {

using Mask = std::uint32_t;

inline void check_enumeration_cap(const WeightedGraph& g) {
  if (g.order() > kEnumerationCap) {
    throw Error(ErrorCode::TooLarge, "Sachs enumeration is limited to 24 vertices");
  }
}

inline Mask full_mask(std::size_t n) { return n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

/// Depth-first cover of the lowest uncovered vertex by a loop, a matching edge
/// or a cycle through it. Only vertices in `allowed` are covered; the visitor
/// sees vertex ids of `g`.
template <typename Visit>
class SachsWalker {
 public:
  SachsWalker(const WeightedGraph& g, Mask allowed, Visit& visit) : g_(g), visit_(visit), allowed_(allowed) {
    nbr_.resize(g.order());
    for (VertexId v = 0; v < g.order(); ++v) nbr_[v] = static_cast<Mask>(g.neighbor_mask(v)) & allowed;
  }

  void run() { cover(allowed_); }

 private:
  bool dead_end(Mask open) const {
    for (Mask rest = open; rest; rest &= rest - 1) {
      VertexId v = static_cast<VertexId>(__builtin_ctz(rest));
      if ((nbr_[v] & open) == 0 && !g_.has_loop(v)) return true;
    }
    return false;
  }

  void cover(Mask open) {
    if (open == 0) {
      visit_(current_);
      return;
    }
    if (dead_end(open)) return;
    VertexId v = static_cast<VertexId>(__builtin_ctz(open));
    Mask rest = open & ~(Mask{1} << v);

    if (g_.has_loop(v)) {
      current_.loops.push_back(v);
      cover(rest);
      current_.loops.pop_back();
    }
    for (Mask m = nbr_[v] & rest; m; m &= m - 1) {
      VertexId u = static_cast<VertexId>(__builtin_ctz(m));
      current_.matching.emplace_back(v, u);
      cover(rest & ~(Mask{1} << u));
      current_.matching.pop_back();
    }
    std::vector<VertexId> path{v};
    extend_cycle(path, rest, open);
  }

  void extend_cycle(std::vector<VertexId>& path, Mask free, Mask open) {
    VertexId head = path.front();
    VertexId tail = path.back();
    for (Mask m = nbr_[tail] & free; m; m &= m - 1) {
      VertexId x = static_cast<VertexId>(__builtin_ctz(m));
      path.push_back(x);
      Mask free_next = free & ~(Mask{1} << x);
      // Close only when the second vertex is smaller than the last, so each cycle is seen once.
      if (path.size() >= 3 && path[1] < x && ((nbr_[x] >> head) & 1U)) {
        Mask used = 0;
        for (VertexId y : path) used |= Mask{1} << y;
        current_.cycles.push_back(path);
        cover(open & ~used);
        current_.cycles.pop_back();
      }
      extend_cycle(path, free_next, open);
      path.pop_back();
    }
  }

  const WeightedGraph& g_;
  Visit& visit_;
  Mask allowed_;
  std::vector<Mask> nbr_;
  SachsSubgraph current_;
};

template <typename Visit>
void for_each_sachs(const WeightedGraph& g, Mask allowed, Visit&& visit) {
  SachsWalker<std::remove_reference_t<Visit>> walker(g, allowed, visit);
  walker.run();
}

}  // namespace detail

/// All Sachs subgraphs of g, each once, in canonical sorted order.
inline std::vector<SachsSubgraph> enumerate_sachs(const WeightedGraph& g) {
  detail::check_enumeration_cap(g);
  std::vector<SachsSubgraph> out;
  detail::for_each_sachs(g, detail::full_mask(g.order()), [&](const SachsSubgraph& s) {
    SachsSubgraph copy = s;
    copy.canonicalize();
    out.push_back(std::move(copy));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Sachs determinant of the subgraph induced on `vertices` (a bitmask of g's vertices).
inline Rational det_via_sachs_on(const WeightedGraph& g, std::uint32_t vertices) {
  detail::check_enumeration_cap(g);
  Rational total = 0;
  detail::for_each_sachs(g, vertices, [&](const SachsSubgraph& s) { total += sachs_term(g, s); });
  return total;
}

/// det(A) as the signed, weighted sum over Sachs subgraphs.
inline Rational det_via_sachs(const WeightedGraph& g) {
  detail::check_enumeration_cap(g);
  return det_via_sachs_on(g, detail::full_mask(g.order()));
}

inline constexpr std::size_t kUnweightedCheckCap = 16;

/// Unweighted simple case, det(A) = sum_S 2^|C| (-1)^(|C|+|E(S)|).
///
/// Evaluated by a subset recurrence over the lowest remaining vertex, with
/// cycles counted through Hamiltonian-path tables, so it shares no code with
/// the enumerating walker above.
inline Rational det_unweighted_check(const WeightedGraph& g) {
  if (!g.is_simple() || !g.is_unweighted()) {
    throw Error(ErrorCode::NotUnweightedSimple, "expected a simple graph with unit weights");
  }
  const std::size_t n = g.order();
  if (n > kUnweightedCheckCap) throw Error(ErrorCode::TooLarge, "unweighted check is limited to 16 vertices");
  if (n == 0) return 1;
  using Mask = std::uint32_t;
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> nbr(n);
  for (VertexId v = 0; v < n; ++v) nbr[v] = static_cast<Mask>(g.neighbor_mask(v));

  // paths[T * n + x]: Hamiltonian paths of G[T] from min(T) to x.
  std::vector<std::int64_t> paths(static_cast<std::size_t>(full + 1) * n, 0);
  for (VertexId v = 0; v < n; ++v) paths[(static_cast<std::size_t>(1) << v) * n + v] = 1;
  for (Mask t = 1; t <= full; ++t) {
    Mask low = t & (~t + 1);
    for (VertexId x = 0; x < n; ++x) {
      std::int64_t c = paths[static_cast<std::size_t>(t) * n + x];
      if (c == 0) continue;
      for (Mask m = nbr[x] & ~t; m; m &= m - 1) {
        Mask y = m & (~m + 1);
        if (y < low) continue;
        paths[static_cast<std::size_t>(t | y) * n + static_cast<std::size_t>(__builtin_ctz(y))] += c;
      }
    }
  }
  auto cycles_on = [&](Mask t) -> std::int64_t {
    if (__builtin_popcount(t) < 3) return 0;
    VertexId root = static_cast<VertexId>(__builtin_ctz(t));
    std::int64_t closed = 0;
    for (Mask m = nbr[root] & t; m; m &= m - 1) {
      closed += paths[static_cast<std::size_t>(t) * n + static_cast<std::size_t>(__builtin_ctz(m))];
    }
    return closed / 2;
  };

  std::vector<mpz_class> f(static_cast<std::size_t>(full) + 1);
  f[0] = 1;
  for (Mask s = 1; s <= full; ++s) {
    VertexId v = static_cast<VertexId>(__builtin_ctz(s));
    Mask bit = Mask{1} << v;
    Mask rest = s & ~bit;
    mpz_class acc = 0;
    for (Mask m = nbr[v] & rest; m; m &= m - 1) acc -= f[rest & ~(m & (~m + 1))];
    for (Mask sub = rest; sub; sub = (sub - 1) & rest) {
      std::int64_t c = cycles_on(sub | bit);
      if (c == 0) continue;
      // one cycle with k edges: 2 * (-1)^(1 + k)
      int k = __builtin_popcount(sub | bit);
      mpz_class term = f[rest & ~sub] * 2 * c;
      if ((1 + k) % 2 == 1) acc -= term;
      else acc += term;
    }
    f[s] = acc;
  }
  return Rational(f[full]);
}

// ---------------------------------------------------------------------------
// Pendant-edge reduction
// ---------------------------------------------------------------------------

struct ReductionTrace {
  /// Removed pendant edges in removal order; `u` of each pair is the degree-1 endpoint.
  std::vector<std::pair<VertexId, VertexId>> removed;
  /// Surviving vertices of the input, ascending.
  std::vector<VertexId> remaining;
  /// Induced subgraph on `remaining`, re-indexed 0..|remaining|-1.
  WeightedGraph residual;
};

/// Repeatedly deletes the pendant edge whose degree-1 endpoint has the smallest
/// index, together with both its end-vertices.
inline ReductionTrace pendant_reduce(const WeightedGraph& g) {
  if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "pendant reduction expects a simple graph");
  const std::size_t n = g.order();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.neighbors(v).size();

  ReductionTrace trace;
  auto kill = [&](VertexId x) {
    alive[x] = false;
    for (VertexId y : g.neighbors(x))
      if (alive[y]) --deg[y];
  };
  for (;;) {
    VertexId leaf = n;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v] && deg[v] == 1) {
        leaf = v;
        break;
      }
    }
    if (leaf == n) break;
    VertexId partner = n;
    for (VertexId y : g.neighbors(leaf)) {
      if (alive[y]) {
        partner = y;
        break;
      }
    }
    trace.removed.emplace_back(leaf, partner);
    kill(leaf);
    kill(partner);
  }
  for (VertexId v = 0; v < n; ++v)
    if (alive[v]) trace.remaining.push_back(v);
  trace.residual = induced_subgraph(g, trace.remaining);
  return trace;
}

struct UniqueSachsResult {
  bool unique = false;
  /// Present exactly when `unique`.
  std::optional<SachsSubgraph> witness;
  ReductionTrace trace;
};

/// Decides whether g has exactly one Sachs subgraph: the pendant reduction must
/// leave a family of independent odd cycles.
inline UniqueSachsResult has_unique_sachs(const WeightedGraph& g) {
  if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "unique-Sachs test expects a simple graph");
  UniqueSachsResult result;
  result.trace = pendant_reduce(g);
  const ReductionTrace& t = result.trace;
  const WeightedGraph& r = t.residual;

  SachsSubgraph witness;
  for (const auto& [leaf, partner] : t.removed) witness.matching.emplace_back(leaf, partner);
  for (const auto& comp : connected_components(r)) {
    bool is_cycle = comp.size() >= 3 && comp.size() % 2 == 1 &&
                    std::all_of(comp.begin(), comp.end(), [&](VertexId v) { return r.neighbors(v).size() == 2; });
    if (!is_cycle) return result;
    std::vector<VertexId> cycle{comp.front()};
    VertexId prev = comp.front();
    VertexId cur = r.neighbors(prev).front();
    while (cur != comp.front()) {
      cycle.push_back(cur);
      const auto& nb = r.neighbors(cur);
      VertexId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    for (VertexId& v : cycle) v = t.remaining[v];
    witness.cycles.push_back(std::move(cycle));
  }
  witness.canonicalize();
  result.unique = true;
  result.witness = std::move(witness);
  return result;
}

// ---------------------------------------------------------------------------
// Perfect matchings
// ---------------------------------------------------------------------------

/// All perfect matchings (loops ignored), each sorted, in lexicographic order.
inline std::vector<std::vector<Edge>> perfect_matchings(const WeightedGraph& g) {
  detail::check_enumeration_cap(g);
  std::vector<std::vector<Edge>> out;
  if (g.order() % 2 == 1) return out;
  std::vector<Edge> current;
  std::vector<bool> used(g.order(), false);
  auto recurse = [&](auto&& self, VertexId from) -> void {
    while (from < g.order() && used[from]) ++from;
    if (from == g.order()) {
      out.push_back(current);
      return;
    }
    used[from] = true;
    for (VertexId u : g.neighbors(from)) {
      if (used[u]) continue;
      used[u] = true;
      current.emplace_back(from, u);
      self(self, from + 1);
      current.pop_back();
      used[u] = false;
    }
    used[from] = false;
  };
  recurse(recurse, 0);
  return out;
}

/// Counts perfect matchings, stopping once `limit` is reached. Works beyond the
/// enumeration cap because it only needs to find the first few.
inline std::size_t count_perfect_matchings(const WeightedGraph& g, std::size_t limit) {
  if (g.order() % 2 == 1) return 0;
  std::size_t found = 0;
  std::vector<bool> used(g.order(), false);
  auto recurse = [&](auto&& self, VertexId from) -> void {
    while (from < g.order() && used[from]) ++from;
    if (from == g.order()) {
      ++found;
      return;
    }
    used[from] = true;
    for (VertexId u : g.neighbors(from)) {
      if (used[u] || found >= limit) continue;
      used[u] = true;
      self(self, from + 1);
      used[u] = false;
    }
    used[from] = false;
  };
  recurse(recurse, 0);
  return found;
}

/// True iff `m` is a set of disjoint non-loop edges of g covering every vertex.
inline bool is_perfect_matching(const WeightedGraph& g, const std::vector<Edge>& m) {
  std::vector<bool> hit(g.order(), false);
  for (const Edge& e : m) {
    if (e.is_loop() || e.v >= g.order() || !g.has_edge(e.u, e.v) || hit[e.u] || hit[e.v]) return false;
    hit[e.u] = hit[e.v] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace graphinv
