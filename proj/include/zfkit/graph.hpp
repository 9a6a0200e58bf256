#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zfkit/vertex_set.hpp"

namespace zfkit {

/// Raised for malformed graphs or graph text (bad endpoints, loops, bad encodings).
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxOrder = 62;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on 1..62 vertices with bit-packed neighbourhoods.
/// Immutable once built; all mutation goes through builders that return new values.
class Graph {
public:
  /// K1.
  Graph() : n_(1) {}

  /// Builds a graph with exactly the given edges. Throws GraphError on a loop,
  /// a repeated pair, an out-of-range endpoint, or an order outside 1..62.
  static Graph build(int n, std::span<const Edge> edges) {
    if (n < 1 || n > kMaxOrder)
      throw GraphError("order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
      if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
      if (g.adj_[u].contains(v))
        throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
    }
    return g;
  }
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph build(int n, const std::vector<Edge>& edges) {
    return build(n, std::span<const Edge>(edges));
  }

  /// Builds from adjacency rows; rows must already be symmetric and loop-free.
  static Graph from_rows(std::span<const VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxOrder) throw GraphError("order " + std::to_string(n) + " outside 1..62");
    Graph g(n);
    const VertexSet all = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
      if (!rows[v].subset_of(all)) throw GraphError("neighbour outside vertex range");
      if (rows[v].contains(v)) throw GraphError("loop at vertex " + std::to_string(v));
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
      for (Vertex u : rows[v])
        if (!rows[u].contains(v)) throw GraphError("asymmetric adjacency rows");
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Graph plus one new vertex (index n) adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const {
    if (n_ >= kMaxOrder) throw GraphError("cannot extend a graph of order 62");
    if (!nbrs.subset_of(vertices())) throw GraphError("neighbourhood outside vertex range");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.adj_[n_] = nbrs;
    for (Vertex u : nbrs) g.adj_[u].insert(n_);
    return g;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    std::vector<Edge> es = edges();
    es.emplace_back(u, v);
    return build(n_, es);
  }

  /// Relabels so that old vertex perm[i] becomes new vertex i.
  Graph relabeled(std::span<const Vertex> perm) const {
    Graph g(n_);
    std::array<Vertex, kMaxOrder> inv{};
    for (int i = 0; i < n_; ++i) inv[perm[i]] = i;
    for (int i = 0; i < n_; ++i)
      for (Vertex u : adj_[perm[i]]) g.adj_[i].insert(inv[u]);
    return g;
  }

  bool operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] != o.adj_[v]) return false;
    return true;
  }

private:
  explicit Graph(int n) : n_(n) {}

  int n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph::build(n, edges); }

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder)
    throw GraphError("disjoint union has order " + std::to_string(n) + ", limit is 62");
  std::vector<Edge> es = g.edges();
  for (auto [u, v] : h.edges()) es.emplace_back(u + g.order(), v + g.order());
  return Graph::build(n, es);
}

/// Vertices reachable from `start` without leaving `within`.
inline VertexSet reachable(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Components of the subgraph induced by `within`, sorted by least vertex.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> parts;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = reachable(g, rest.first(), within);
    parts.push_back(c);
    rest -= c;
  }
  return parts;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

inline bool is_connected(const Graph& g) {
  return reachable(g, 0, g.vertices()) == g.vertices();
}

/// Subgraph induced by `s`, relabelled by increasing original index.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw GraphError("induced subgraph of an empty vertex set");
  if (!s.subset_of(g.vertices())) throw GraphError("vertex set outside graph");
  const std::vector<Vertex> keep = s.to_vector();
  std::array<Vertex, kMaxOrder> pos{};
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex u : g.neighbors(keep[i]) & s)
      if (keep[i] < u) es.emplace_back(static_cast<Vertex>(i), pos[u]);
  return Graph::build(static_cast<int>(keep.size()), es);
}

inline Graph remove_vertex(const Graph& g, Vertex v) {
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace zfkit
