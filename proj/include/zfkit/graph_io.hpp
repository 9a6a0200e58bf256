#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zfkit/graph.hpp"

namespace zfkit {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 record (short form, n <= 62). A leading ">>graph6<<"
/// header and trailing line-break characters are ignored.
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw GraphError("graph6: empty input");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw GraphError("graph6: byte " + std::to_string(b) + " outside 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 63) throw GraphError("graph6: orders above 62 are not supported");
  if (n < 1) throw GraphError("graph6: order 0 is not supported");
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - 1 != nbytes)
    throw GraphError("graph6: expected " + std::to_string(nbytes) + " body bytes for n=" + std::to_string(n) +
                     ", got " + std::to_string(text.size() - 1));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < nbytes * 6; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1) throw GraphError("graph6: nonzero padding bits");
  }
  return Graph::build(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out += static_cast<char>(63 + (acc << (6 - used)));
  return out;
}

/// Reads newline-separated graph6 records; blank lines are skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const GraphError& e) {
      throw GraphError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

namespace detail {

inline bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<long> parse_ints(const std::string& line, int lineno) {
  std::istringstream ss(line);
  std::vector<long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw GraphError("edge list line " + std::to_string(lineno) + ": bad token '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Edge-list text: a header "n m" then m lines "u v". Whitespace-tolerant;
/// lines starting with '#' are comments.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  if (!detail::next_data_line(in, line, lineno)) throw GraphError("edge list: missing header line");
  auto header = detail::parse_ints(line, lineno);
  if (header.size() != 2) throw GraphError("edge list: header must be 'n m'");
  const long n = header[0];
  const long m = header[1];
  if (n < 1 || n > kMaxOrder) throw GraphError("edge list: order " + std::to_string(n) + " outside 1..62");
  if (m < 0) throw GraphError("edge list: negative edge count");
  std::vector<Edge> edges;
  VertexSet seen[kMaxOrder];
  for (long e = 0; e < m; ++e) {
    if (!detail::next_data_line(in, line, lineno))
      throw GraphError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    auto uv = detail::parse_ints(line, lineno);
    if (uv.size() != 2) throw GraphError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    const long u = uv[0];
    const long v = uv[1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge list line " + std::to_string(lineno) + ": vertex out of range");
    if (u == v) throw GraphError("edge list line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u));
    if (seen[u].contains(static_cast<Vertex>(v)))
      throw GraphError("edge list line " + std::to_string(lineno) + ": duplicate edge");
    seen[u].insert(static_cast<Vertex>(v));
    seen[v].insert(static_cast<Vertex>(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (detail::next_data_line(in, line, lineno))
    throw GraphError("edge list line " + std::to_string(lineno) + ": more edges than the header declares");
  return Graph::build(static_cast<int>(n), edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace zfkit
