#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zfkit/graph.hpp"

namespace zfkit {

/// Isomorphism-invariant key: order plus the upper-triangle adjacency bits of
/// the canonical relabelling, in column order a(0,1) a(0,2) a(1,2) a(0,3) ...,
/// packed most-significant bit first. Equal forms iff isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> bits;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s = std::to_string(n) + ":";
    for (auto b : bits) {
      s += digits[b >> 4];
      s += digits[b & 15];
    }
    return s;
  }
};

namespace detail {

/// Stable colour refinement seeded with degrees. Colour ids are assigned from
/// sorted signatures, so they depend only on the isomorphism class.
inline std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex u : g.neighbors(v)) sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

struct PartialLabel {
  std::array<Vertex, kMaxOrder> order{};
  VertexSet placed;
};

}  // namespace detail

/// Canonical labelling: result[i] is the original vertex placed at position i.
/// Positions are filled cell by cell in refined-colour order; within that
/// constraint the column-order adjacency string is lexicographically minimal.
/// Candidates that are twins of a smaller candidate are skipped, since the
/// transposition of twins is an automorphism fixing every placed vertex.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  const int n = g.order();
  const std::vector<int> color = detail::refine_colors(g);

  std::vector<int> cell_of_position(n);
  {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    cell_of_position = sorted;
  }
  std::map<int, VertexSet> members;
  for (int v = 0; v < n; ++v) members[color[v]].insert(v);

  std::vector<detail::PartialLabel> frontier(1);
  std::vector<detail::PartialLabel> next;
  for (int j = 0; j < n; ++j) {
    const VertexSet cell = members[cell_of_position[j]];
    std::uint64_t best = ~std::uint64_t{0};
    next.clear();
    for (const auto& state : frontier) {
      const VertexSet candidates = cell - state.placed;
      for (Vertex v : candidates) {
        bool twin_of_smaller = false;
        for (Vertex u : candidates) {
          if (u >= v) break;
          if ((g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u))) {
            twin_of_smaller = true;
            break;
          }
        }
        if (twin_of_smaller) continue;
        std::uint64_t column = 0;
        for (int i = 0; i < j; ++i) column = (column << 1) | (g.adjacent(state.order[i], v) ? 1U : 0U);
        if (column > best) continue;
        if (column < best) {
          best = column;
          next.clear();
        }
        detail::PartialLabel child = state;
        child.order[j] = v;
        child.placed.insert(v);
        next.push_back(child);
      }
    }
    std::swap(frontier, next);
  }
  const auto& winner = frontier.front();
  return {winner.order.begin(), winner.order.begin() + n};
}

/// Packs the column-order upper triangle of g (as labelled) into bytes.
inline std::vector<std::uint8_t> pack_upper_triangle(const Graph& g) {
  const int n = g.order();
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> out((nbits + 7) / 8, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) out[k / 8] |= static_cast<std::uint8_t>(0x80U >> (k % 8));
  return out;
}

inline Graph canonical_graph(const Graph& g) {
  const auto perm = canonical_labeling(g);
  return g.relabeled(perm);
}

inline CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{g.order(), pack_upper_triangle(canonical_graph(g))};
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace zfkit
