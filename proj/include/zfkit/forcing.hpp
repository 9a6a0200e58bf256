#pragma once

#include <optional>
#include <vector>

#include "zfkit/graph.hpp"

namespace zfkit {

struct Force {
  Vertex forcer;
  Vertex forced;
  int round;

  bool operator==(const Force&) const = default;
};

/// Forces in the order they were applied. Rounds start at 1.
struct ForcingTrace {
  std::vector<Force> steps;
};

struct ClosureResult {
  VertexSet final_set;
  ForcingTrace trace;
  bool stalled_immediately = false;
};

/// Forcing closure with a trace. Each round takes a snapshot of the blue set;
/// every snapshot-blue vertex with exactly one white neighbour forces it,
/// scanning forcers in ascending order, and a vertex already forced this round
/// keeps its first forcer. Rounds repeat until one fires nothing.
inline ClosureResult closure(const Graph& g, VertexSet s) {
  ClosureResult result;
  VertexSet blue = s & g.vertices();
  for (int round = 1;; ++round) {
    VertexSet added;
    for (Vertex v : blue) {
      const VertexSet white = g.neighbors(v) - blue;
      if (white.size() != 1) continue;
      const Vertex u = white.first();
      if (added.contains(u)) continue;
      added.insert(u);
      result.trace.steps.push_back({v, u, round});
    }
    if (round == 1) result.stalled_immediately = added.empty();
    if (added.empty()) break;
    blue |= added;
  }
  result.final_set = blue;
  return result;
}

/// Closure set only, for search loops.
inline VertexSet closure_set(const Graph& g, VertexSet s) {
  VertexSet blue = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : blue) {
      const VertexSet white = g.neighbors(v) - blue;
      if (white.size() == 1) {
        blue |= white;
        changed = true;
      }
    }
  }
  return blue;
}

/// No blue vertex has exactly one white neighbour.
inline bool is_stalled(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if ((g.neighbors(v) - s).size() == 1) return false;
  return true;
}

inline bool is_failed_set(const Graph& g, VertexSet s) { return closure_set(g, s) != g.vertices(); }

inline bool is_zero_forcing_set(const Graph& g, VertexSet s) { return closure_set(g, s) == g.vertices(); }

/// Smallest zero forcing set, first in bit-pattern order among those of minimum size.
inline VertexSet minimum_zero_forcing_set(const Graph& g) {
  const int n = g.order();
  VertexSet found;
  for (int k = 0; k <= n; ++k) {
    if (for_each_subset_of_size(n, k, [&](VertexSet s) {
          if (!is_zero_forcing_set(g, s)) return false;
          found = s;
          return true;
        }))
      return found;
  }
  return g.vertices();
}

inline int zero_forcing_number(const Graph& g) { return minimum_zero_forcing_set(g).size(); }

/// Nonempty T such that no vertex outside T has exactly one neighbour in T.
inline bool is_fort(const Graph& g, VertexSet t) {
  if (t.empty()) return false;
  for (Vertex v : g.vertices() - t)
    if ((g.neighbors(v) & t).size() == 1) return false;
  return true;
}

/// Minimum fort, least bit pattern among forts of that size. The whole vertex
/// set is always a fort, so one exists.
inline VertexSet min_fort(const Graph& g) {
  const int n = g.order();
  VertexSet found;
  for (int k = 1; k <= n; ++k) {
    if (for_each_subset_of_size(n, k, [&](VertexSet t) {
          if (!is_fort(g, t)) return false;
          found = t;
          return true;
        }))
      return found;
  }
  return g.vertices();
}

/// F(G) = n - |minimum fort|: the complement of any fort is a failed set, and
/// the white vertices left by a failed set's closure form a fort.
inline int failed_zero_forcing_number(const Graph& g) { return g.order() - min_fort(g).size(); }

/// Largest failed set by descending subset search. Used as an oracle against
/// the fort route.
inline VertexSet maximum_failed_set_brute_force(const Graph& g) {
  const int n = g.order();
  VertexSet found;
  for (int k = n - 1; k >= 0; --k) {
    if (for_each_subset_of_size(n, k, [&](VertexSet s) {
          if (!is_failed_set(g, s)) return false;
          found = s;
          return true;
        }))
      return found;
  }
  return found;
}

inline int failed_zero_forcing_number_brute_force(const Graph& g) {
  return maximum_failed_set_brute_force(g).size();
}

/// Blue vertices whose whole neighbourhood is blue.
inline VertexSet true_blue(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s)
    if (g.neighbors(v).subset_of(s)) out.insert(v);
  return out;
}

/// First set (bit-pattern order) of the given size that is its own closure,
/// optionally with no true-blue member.
inline std::optional<VertexSet> find_stalled_set(const Graph& g, int size, bool forbid_true_blue) {
  std::optional<VertexSet> found;
  for_each_subset_of_size(g.order(), size, [&](VertexSet s) {
    if (!is_stalled(g, s)) return false;
    if (forbid_true_blue && !true_blue(g, s).empty()) return false;
    found = s;
    return true;
  });
  return found;
}

}  // namespace zfkit
