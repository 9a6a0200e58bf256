#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zfkit/graph.hpp"

namespace zfkit {

/// A catalog name with integer parameters, e.g. {"complete_bipartite", {2, 3}}.
struct NamedGraphSpec {
  std::string name;
  std::vector<int> params;

  /// Parses "NAME" or "NAME:P1,P2,...".
  static NamedGraphSpec parse(std::string_view text) {
    NamedGraphSpec spec;
    const auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (colon == std::string_view::npos) return spec;
    std::string_view rest = text.substr(colon + 1);
    if (rest.empty()) throw GraphError("named graph '" + spec.name + "': empty parameter list");
    while (true) {
      const auto comma = rest.find(',');
      const std::string tok(rest.substr(0, comma));
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (tok.empty() || used != tok.size())
        throw GraphError("named graph '" + spec.name + "': bad parameter '" + tok + "'");
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return spec;
  }
};

namespace catalog {

inline Graph empty(int n) { return Graph::build(n, std::vector<Edge>{}); }

inline Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::build(n, es);
}

inline Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::build(n, es);
}

inline Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::build(n, es);
}

inline Graph complete_bipartite(int r, int t) {
  if (r < 1 || t < 1) throw GraphError("complete_bipartite needs both parts nonempty");
  std::vector<Edge> es;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < t; ++j) es.emplace_back(i, r + j);
  return Graph::build(r + t, es);
}

inline Graph star(int k) { return complete_bipartite(1, k); }

/// Hub 0 joined to every vertex of the cycle 1..n-1.
inline Graph wheel(int n) {
  if (n < 4) throw GraphError("wheel needs at least 4 vertices");
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) {
    es.emplace_back(0, i);
    es.emplace_back(i, i == n - 1 ? 1 : i + 1);
  }
  return Graph::build(n, es);
}

inline Graph claw() { return star(3); }
inline Graph paw() { return Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }
inline Graph diamond() { return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }
/// C5 0-1-2-3-4-0 with chord 1-4 (a square 1-2-3-4 under the roof 0).
inline Graph house() { return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}}); }
/// Triangle 0-1-2 with pendants 3, 4 on vertices 1, 2.
inline Graph bull() { return Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}}); }
/// Hub 0 joined to the path 1-2-3-4.
inline Graph gem() {
  return Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
}
/// Triangle 0-1-2 with pendants 3, 4, 5 on 0, 1, 2.
inline Graph corona_k3() { return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }
inline Graph net() { return corona_k3(); }

inline constexpr int kFigure1Count = 15;

/// The fifteen graphs with failed zero-forcing number 2, in this fixed order:
///  1 3K1, 2 K2+K1, 3 K2+K2, 4 claw, 5 paw, 6 C4, 7 diamond, 8 K4, 9 bull
///  (triangle with two pendants), 10 P5, 11 house, 12 gem (the five-vertex
///  hub graph; wheel(5) has F = 3), 13 C5, 14 P6, 15 net.
inline Graph figure1(int i) {
  switch (i) {
    case 1: return empty(3);
    case 2: return Graph::build(3, {{0, 1}});
    case 3: return Graph::build(4, {{0, 1}, {2, 3}});
    case 4: return claw();
    case 5: return paw();
    case 6: return cycle(4);
    case 7: return diamond();
    case 8: return complete(4);
    case 9: return bull();
    case 10: return path(5);
    case 11: return house();
    case 12: return gem();
    case 13: return cycle(5);
    case 14: return path(6);
    case 15: return net();
    default: throw GraphError("figure1 index " + std::to_string(i) + " outside 1..15");
  }
}

inline std::vector<Graph> figure1_list() {
  std::vector<Graph> out;
  for (int i = 1; i <= kFigure1Count; ++i) out.push_back(figure1(i));
  return out;
}

inline const char* figure1_name(int i) {
  static constexpr const char* names[] = {"3K1", "K2+K1", "K2+K2", "claw", "paw", "C4", "diamond", "K4",
                                          "bull", "P5", "house", "gem", "C5", "P6", "net"};
  if (i < 1 || i > kFigure1Count) throw GraphError("figure1 index outside 1..15");
  return names[i - 1];
}

inline std::vector<Graph> f0_list() { return {complete(1), complete(2)}; }
inline std::vector<Graph> f1_list() { return {empty(2), path(3), complete(3), path(4)}; }

/// Hand-drawn reference list for the six-vertex exception census, keyed by the
/// numbering of the standard table of connected six-vertex graphs. Edges are
/// transcribed from the drawings as they stand, including entry 112 (drawn
/// with nine edges although the accompanying text calls it P6).
struct ReferenceException {
  int number;
  std::vector<Edge> edges;
};

inline const std::vector<ReferenceException>& reference_exceptions() {
  static const std::vector<ReferenceException> table = {
      {54, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}},
      {58, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}},
      {59, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}},
      {60, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}}},
      {76, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}}},
      {77, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {4, 5}}},
      {80, {{0, 1}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}},
      {85, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 3}, {3, 4}, {3, 5}}},
      {86, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 5}, {2, 3}, {4, 5}}},
      {87, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 5}, {3, 5}, {4, 5}}},
      {96, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {4, 5}}},
      {98, {{0, 1}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}},
      {102, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 5}}},
      {103, {{0, 1}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}}},
      {105, {{0, 2}, {0, 4}, {1, 2}, {1, 5}, {2, 3}, {4, 5}}},
      {112, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}},
  };
  return table;
}

inline Graph reference_exception(int number) {
  for (const auto& r : reference_exceptions())
    if (r.number == number) return Graph::build(6, r.edges);
  throw GraphError("no reference exception numbered " + std::to_string(number));
}

}  // namespace catalog

/// Resolves a catalog entry. Throws GraphError for unknown names or bad parameters.
inline Graph named_graph(const NamedGraphSpec& spec) {
  const auto& p = spec.params;
  auto want = [&](std::size_t count) {
    if (p.size() != count)
      throw GraphError("named graph '" + spec.name + "' takes " + std::to_string(count) + " parameter(s)");
  };
  auto order_in = [&](int v, int lo, int hi) {
    if (v < lo || v > hi)
      throw GraphError("named graph '" + spec.name + "': parameter " + std::to_string(v) + " outside " +
                       std::to_string(lo) + ".." + std::to_string(hi));
  };
  const std::string& name = spec.name;
  if (name == "complete") { want(1); order_in(p[0], 1, kMaxOrder); return catalog::complete(p[0]); }
  if (name == "path") { want(1); order_in(p[0], 1, kMaxOrder); return catalog::path(p[0]); }
  if (name == "cycle") { want(1); order_in(p[0], 3, kMaxOrder); return catalog::cycle(p[0]); }
  if (name == "empty") { want(1); order_in(p[0], 1, kMaxOrder); return catalog::empty(p[0]); }
  if (name == "wheel") { want(1); order_in(p[0], 4, kMaxOrder); return catalog::wheel(p[0]); }
  if (name == "star") { want(1); order_in(p[0], 1, kMaxOrder - 1); return catalog::star(p[0]); }
  if (name == "complete_bipartite") {
    want(2);
    order_in(p[0], 1, kMaxOrder - 1);
    order_in(p[1], 1, kMaxOrder - p[0]);
    return catalog::complete_bipartite(p[0], p[1]);
  }
  if (name == "figure1") { want(1); order_in(p[0], 1, catalog::kFigure1Count); return catalog::figure1(p[0]); }
  if (name == "reference_exception") { want(1); return catalog::reference_exception(p[0]); }
  want(0);
  if (name == "claw") return catalog::claw();
  if (name == "paw") return catalog::paw();
  if (name == "diamond") return catalog::diamond();
  if (name == "house") return catalog::house();
  if (name == "bull") return catalog::bull();
  if (name == "net") return catalog::net();
  if (name == "gem") return catalog::gem();
  if (name == "corona_k3") return catalog::corona_k3();
  throw GraphError("unknown named graph '" + name + "'");
}

inline Graph named_graph(std::string_view text) { return named_graph(NamedGraphSpec::parse(text)); }

}  // namespace zfkit
