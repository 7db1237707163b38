#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphinv/error.hpp"
#include "graphinv/rational.hpp"

namespace graphinv {

using VertexId = std::size_t;

/// Unordered vertex pair stored with u <= v; u == v is a loop.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loop-allowing simple graph with nonzero exact rational weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n) : n_(n), adj_(n) {}

  /// Inserts edge {a,b}. Rejects duplicates, zero weights, and bad indices.
  void add_edge(VertexId a, VertexId b, Rational w) {
    if (a >= n_ || b >= n_) {
      throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                  ") on " + std::to_string(n_) + " vertices");
    }
    if (w == 0) {
      throw Error(ErrorCode::ZeroWeight, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    Edge e(a, b);
    if (!edges_.emplace(e, std::move(w)).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (e.is_loop()) {
      ++loops_;
    } else {
      insert_sorted(adj_[e.u], e.v);
      insert_sorted(adj_[e.v], e.u);
    }
  }

  std::size_t order() const { return n_; }
  /// Number of edges, loops included.
  std::size_t size() const { return edges_.size(); }
  const std::map<Edge, Rational>& edges() const { return edges_; }

  bool has_edge(VertexId a, VertexId b) const { return edges_.count(Edge(a, b)) != 0; }
  const Rational* find(VertexId a, VertexId b) const {
    auto it = edges_.find(Edge(a, b));
    return it == edges_.end() ? nullptr : &it->second;
  }
  Rational weight_or_zero(VertexId a, VertexId b) const {
    const Rational* w = find(a, b);
    return w ? *w : Rational(0);
  }
  bool has_loop(VertexId v) const { return has_edge(v, v); }

  /// Non-loop neighbours, ascending.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }

  /// Incident edges with a loop counted once.
  std::size_t degree(VertexId v) const { return adj_[v].size() + (has_loop(v) ? 1 : 0); }

  bool is_simple() const { return loops_ == 0; }
  std::size_t loop_count() const { return loops_; }

  bool is_signed() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const auto& kv) { return kv.second == 1 || kv.second == -1; });
  }
  bool is_unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const auto& kv) { return kv.second == 1; });
  }

  /// Bitmask of non-loop neighbours; only meaningful for order() <= 64.
  std::uint64_t neighbor_mask(VertexId v) const {
    std::uint64_t m = 0;
    for (VertexId u : adj_[v]) m |= std::uint64_t{1} << u;
    return m;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static void insert_sorted(std::vector<VertexId>& list, VertexId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  }

  std::size_t n_ = 0;
  std::map<Edge, Rational> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t loops_ = 0;
};

/// A weighted graph whose every weight is exactly +1 or -1.
class SignedGraph {
 public:
  explicit SignedGraph(WeightedGraph g) : g_(std::move(g)) {
    if (!g_.is_signed()) throw Error(ErrorCode::NotSigned, "weights outside {-1,+1}");
  }

  const WeightedGraph& graph() const { return g_; }
  std::size_t order() const { return g_.order(); }
  int sign(VertexId a, VertexId b) const { return *g_.find(a, b) > 0 ? 1 : -1; }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  WeightedGraph g_;
};

/// Same vertex and edge sets, every weight replaced by +1.
inline WeightedGraph underlying(const WeightedGraph& g) {
  WeightedGraph out(g.order());
  for (const auto& [e, w] : g.edges()) out.add_edge(e.u, e.v, 1);
  return out;
}

/// Induced subgraph on `keep` (ascending); vertex keep[k] becomes k.
inline WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<VertexId>& keep) {
  std::vector<std::size_t> index(g.order(), g.order());
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = k;
  WeightedGraph out(keep.size());
  for (const auto& [e, w] : g.edges()) {
    if (index[e.u] < keep.size() && index[e.v] < keep.size()) out.add_edge(index[e.u], index[e.v], w);
  }
  return out;
}

/// (G - v): removes v with its incident edges and loop; later indices shift down by one.
inline WeightedGraph delete_vertex(const WeightedGraph& g, VertexId v) {
  if (v >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
  std::vector<VertexId> keep;
  keep.reserve(g.order() - 1);
  for (VertexId x = 0; x < g.order(); ++x) {
    if (x != v) keep.push_back(x);
  }
  return induced_subgraph(g, keep);
}

inline Rational product_of_weights(const WeightedGraph& g, const std::vector<VertexId>& walk, bool closed) {
  Rational p = 1;
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) p *= *g.find(walk[k], walk[k + 1]);
  if (closed && walk.size() > 1) p *= *g.find(walk.back(), walk.front());
  return p;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t parse_index(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                                      tok + "'");
  }
  return static_cast<std::size_t>(std::stoull(tok));
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Reads "n m" followed by m lines "u v w". Blank lines and lines starting
/// with '#' are ignored.
inline WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    rows.emplace_back(line_no, detail::split_ws(line));
  }
  if (rows.empty()) throw Error(ErrorCode::Parse, "missing header line 'n m'");
  const auto& [hdr_line, header] = rows.front();
  if (header.size() != 2) throw Error(ErrorCode::Parse, "header must be 'n m'");
  std::size_t n = detail::parse_index(header[0], hdr_line);
  std::size_t m = detail::parse_index(header[1], hdr_line);
  if (rows.size() - 1 != m) {
    throw Error(ErrorCode::Parse, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(rows.size() - 1));
  }
  WeightedGraph g(n);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& [ln, tok] = rows[k];
    if (tok.size() != 3) throw Error(ErrorCode::Parse, "line " + std::to_string(ln) + ": expected 'u v w'");
    g.add_edge(detail::parse_index(tok[0], ln), detail::parse_index(tok[1], ln), parse_rational(tok[2]));
  }
  return g;
}

/// Inverse of parse_graph; edges sorted by (min, max) endpoint.
inline std::string serialize_graph(const WeightedGraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [e, w] : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + to_string(w) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Switching and balance
// ---------------------------------------------------------------------------

/// Negates every edge with exactly one endpoint in `side`.
inline SignedGraph switch_cut(const SignedGraph& g, const std::vector<bool>& side) {
  const WeightedGraph& base = g.graph();
  if (side.size() != base.order()) {
    throw Error(ErrorCode::IndexOutOfRange, "cut indicator has wrong length");
  }
  WeightedGraph out(base.order());
  for (const auto& [e, w] : base.edges()) {
    out.add_edge(e.u, e.v, side[e.u] != side[e.v] ? Rational(-w) : w);
  }
  return SignedGraph(std::move(out));
}

/// True iff some switching makes every sign +1. Loops are rejected.
inline bool is_balanced(const SignedGraph& g) {
  const WeightedGraph& base = g.graph();
  if (!base.is_simple()) throw Error(ErrorCode::HasLoops, "balance is undefined with loops");
  const std::size_t n = base.order();
  std::vector<int> potential(n, 0);
  for (VertexId root = 0; root < n; ++root) {
    if (potential[root] != 0) continue;
    potential[root] = 1;
    std::queue<VertexId> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      VertexId x = frontier.front();
      frontier.pop();
      for (VertexId y : base.neighbors(x)) {
        int expected = potential[x] * g.sign(x, y);
        if (potential[y] == 0) {
          potential[y] = expected;
          frontier.push(y);
        } else if (potential[y] != expected) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Connected components of the non-loop structure, each ascending, ordered by smallest vertex.
inline std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId r = 0; r < g.order(); ++r) {
    if (seen[r]) continue;
    std::vector<VertexId> comp{r};
    seen[r] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (VertexId y : g.neighbors(comp[k])) {
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const WeightedGraph& g) { return connected_components(g).size() <= 1; }

inline bool is_tree(const WeightedGraph& g) {
  return g.order() >= 1 && g.is_simple() && g.size() + 1 == g.order() && is_connected(g);
}

/// Two-colouring check on the non-loop structure; loops make a graph non-bipartite.
inline bool is_bipartite(const WeightedGraph& g) {
  if (!g.is_simple()) return false;
  std::vector<int> colour(g.order(), -1);
  for (VertexId r = 0; r < g.order(); ++r) {
    if (colour[r] >= 0) continue;
    colour[r] = 0;
    std::queue<VertexId> q;
    q.push(r);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (VertexId y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace graphinv
