#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zfkit/graph.hpp"

namespace zfkit {

enum class PatternKind { cherry, pendant_triangle, pendant_v, module2 };

inline const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::cherry: return "cherry";
    case PatternKind::pendant_triangle: return "pendant_triangle";
    case PatternKind::pendant_v: return "pendant_v";
    case PatternKind::module2: return "module2";
  }
  return "?";
}

/// Witness for a structural pattern.
///   cherry:           (center, a, b), a < b
///   pendant_triangle: (v, u, w), v the cut vertex, u < w
///   pendant_v:        (v, a, b), a and b the least vertices of two path components of G - v
///   module2:          (u, v), u < v
struct PatternHit {
  PatternKind kind;
  std::vector<Vertex> vertices;

  bool operator==(const PatternHit&) const = default;
};

inline bool is_cut_vertex(const Graph& g, Vertex v) {
  const VertexSet rest = g.vertices() - VertexSet::single(v);
  const std::size_t before = components_within(g, g.vertices()).size();
  return components_within(g, rest).size() > before;
}

inline VertexSet cut_vertices(const Graph& g) {
  VertexSet out;
  if (g.order() < 3) return out;
  const std::size_t before = connected_components(g).size();
  for (Vertex v = 0; v < g.order(); ++v)
    if (components_within(g, g.vertices() - VertexSet::single(v)).size() > before) out.insert(v);
  return out;
}

/// Induced subgraph on `part` is a path (P1 included). `part` must be connected.
inline bool component_is_path(const Graph& g, VertexSet part) {
  int twice_edges = 0;
  for (Vertex v : part) {
    const int d = (g.neighbors(v) & part).size();
    if (d > 2) return false;
    twice_edges += d;
  }
  return twice_edges / 2 == part.size() - 1;
}

inline std::vector<PatternHit> find_cherries(const Graph& g) {
  std::vector<PatternHit> hits;
  for (Vertex c = 0; c < g.order(); ++c) {
    const VertexSet nb = g.neighbors(c);
    for (Vertex a : nb)
      for (Vertex b : nb)
        if (a < b && !g.adjacent(a, b)) hits.push_back({PatternKind::cherry, {c, a, b}});
  }
  return hits;
}

inline std::optional<PatternHit> has_pendant_triangle(const Graph& g) {
  for (Vertex v : cut_vertices(g)) {
    if (g.degree(v) != 3) continue;
    const VertexSet nb = g.neighbors(v);
    for (Vertex u : nb)
      for (Vertex w : nb)
        if (u < w && g.adjacent(u, w) && g.degree(u) == 2 && g.degree(w) == 2)
          return PatternHit{PatternKind::pendant_triangle, {v, u, w}};
  }
  return std::nullopt;
}

inline std::optional<PatternHit> has_pendant_v(const Graph& g) {
  for (Vertex v : cut_vertices(g)) {
    if (g.degree(v) < 3) continue;
    std::vector<Vertex> path_roots;
    for (VertexSet part : components_within(g, g.vertices() - VertexSet::single(v)))
      if (component_is_path(g, part)) path_roots.push_back(part.first());
    if (path_roots.size() >= 2) return PatternHit{PatternKind::pendant_v, {v, path_roots[0], path_roots[1]}};
  }
  return std::nullopt;
}

/// A cut vertex v with G - v split into at least three components, at least
/// two of them paths. For n >= 5 this forces F(G) >= 3.
inline std::optional<Vertex> find_multi_path_cut_vertex(const Graph& g) {
  for (Vertex v : cut_vertices(g)) {
    const auto parts = components_within(g, g.vertices() - VertexSet::single(v));
    if (parts.size() < 3) continue;
    int paths = 0;
    for (VertexSet part : parts)
      if (component_is_path(g, part)) ++paths;
    if (paths >= 2) return v;
  }
  return std::nullopt;
}

inline std::vector<PatternHit> modules_of_order_2(const Graph& g) {
  std::vector<PatternHit> hits;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if ((g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u)))
        hits.push_back({PatternKind::module2, {u, v}});
  return hits;
}

/// Every member of s has at least two neighbours outside s. Such a set stays
/// stalled in any supergraph where the new vertices start white.
inline bool is_extension_safe(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if ((g.neighbors(v) - s).size() < 2) return false;
  return true;
}

/// Re-checks a witness against its pattern definition.
inline bool validate(const Graph& g, const PatternHit& hit) {
  const auto& x = hit.vertices;
  const int n = g.order();
  for (Vertex v : x)
    if (v < 0 || v >= n) return false;
  switch (hit.kind) {
    case PatternKind::cherry:
      return x.size() == 3 && g.adjacent(x[0], x[1]) && g.adjacent(x[0], x[2]) && !g.adjacent(x[1], x[2]) &&
             x[1] != x[2];
    case PatternKind::pendant_triangle:
      return x.size() == 3 && is_cut_vertex(g, x[0]) && g.degree(x[0]) == 3 && g.adjacent(x[0], x[1]) &&
             g.adjacent(x[0], x[2]) && g.adjacent(x[1], x[2]) && g.degree(x[1]) == 2 && g.degree(x[2]) == 2;
    case PatternKind::pendant_v: {
      if (x.size() != 3 || !is_cut_vertex(g, x[0]) || g.degree(x[0]) < 3) return false;
      const VertexSet rest = g.vertices() - VertexSet::single(x[0]);
      const VertexSet a = reachable(g, x[1], rest);
      const VertexSet b = reachable(g, x[2], rest);
      return x[1] != x[0] && x[2] != x[0] && a != b && component_is_path(g, a) && component_is_path(g, b);
    }
    case PatternKind::module2:
      return x.size() == 2 && x[0] != x[1] &&
             (g.neighbors(x[0]) - VertexSet::single(x[1])) == (g.neighbors(x[1]) - VertexSet::single(x[0]));
  }
  return false;
}

inline bool has_pattern(const Graph& g, PatternKind kind) {
  switch (kind) {
    case PatternKind::pendant_v: return has_pendant_v(g).has_value();
    case PatternKind::pendant_triangle: return has_pendant_triangle(g).has_value();
    case PatternKind::cherry: return !find_cherries(g).empty();
    case PatternKind::module2: return !modules_of_order_2(g).empty();
  }
  return false;
}

/// A vertex whose removal keeps g connected and free of the `avoid` pattern.
/// Tries leaves first, then degree-2 cycle vertices next to a branch vertex,
/// then every vertex in index order. Throws std::invalid_argument when g is
/// disconnected, has fewer than 6 vertices, or already has the pattern.
inline std::optional<Vertex> reduction_vertex(const Graph& g, PatternKind avoid) {
  if (avoid != PatternKind::pendant_v && avoid != PatternKind::pendant_triangle)
    throw std::invalid_argument("reduction_vertex: avoid must be pendant_v or pendant_triangle");
  if (g.order() < 6) throw std::invalid_argument("reduction_vertex: graph has fewer than 6 vertices");
  if (!is_connected(g)) throw std::invalid_argument("reduction_vertex: graph is disconnected");
  if (has_pattern(g, avoid))
    throw std::invalid_argument(std::string("reduction_vertex: graph already has a ") + to_string(avoid));

  auto works = [&](Vertex v) {
    const Graph h = remove_vertex(g, v);
    return is_connected(h) && !has_pattern(h, avoid);
  };
  const VertexSet cuts = cut_vertices(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1 && works(v)) return v;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2 || cuts.contains(v)) continue;
    bool next_to_branch = false;
    for (Vertex u : g.neighbors(v)) next_to_branch = next_to_branch || g.degree(u) >= 3;
    if (next_to_branch && works(v)) return v;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (works(v)) return v;
  return std::nullopt;
}

}  // namespace zfkit
