#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zfkit/canonical.hpp"
#include "zfkit/graph.hpp"

namespace zfkit {

inline constexpr int kMaxGeneratedOrder = 9;

enum class StreamSource { internal_generator, external_graph6 };

/// Pairwise non-isomorphic graphs of one order, canonically labelled and
/// sorted by canonical form.
struct GraphStream {
  int order = 0;
  bool connected_only = false;
  StreamSource source = StreamSource::internal_generator;
  std::vector<Graph> graphs;

  auto begin() const { return graphs.begin(); }
  auto end() const { return graphs.end(); }
  std::size_t size() const { return graphs.size(); }
};

namespace detail {

/// Canonical relabelling plus its packed form, computed from one labelling.
inline std::pair<CanonicalForm, Graph> canonicalize(const Graph& g) {
  Graph c = canonical_graph(g);
  CanonicalForm form{c.order(), pack_upper_triangle(c)};
  return {std::move(form), std::move(c)};
}

class OrderCache {
public:
  static OrderCache& instance() {
    static OrderCache cache;
    return cache;
  }

  const std::vector<Graph>& all_of_order(int n) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(levels_.size()) < n) levels_.push_back(extend_level(levels_.back()));
    return levels_[n - 1];
  }

private:
  OrderCache() { levels_.push_back({Graph()}); }

  static std::vector<Graph> extend_level(const std::vector<Graph>& prev) {
    std::map<CanonicalForm, Graph> seen;
    for (const Graph& g : prev) {
      const std::uint64_t limit = std::uint64_t{1} << g.order();
      for (std::uint64_t mask = 0; mask < limit; ++mask) {
        auto [form, c] = canonicalize(g.with_vertex(VertexSet(mask)));
        seen.try_emplace(std::move(form), std::move(c));
      }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [form, g] : seen) out.push_back(std::move(g));
    return out;
  }

  std::mutex mutex_;
  std::vector<std::vector<Graph>> levels_;
};

}  // namespace detail

/// Every isomorphism class of order n exactly once (optionally connected
/// only). Built by adding a vertex with every possible neighbourhood to each
/// class of order n - 1 and deduplicating by canonical form. Levels are cached
/// for the life of the process.
inline GraphStream graphs_of_order(int n, bool connected_only) {
  if (n < 1 || n > kMaxGeneratedOrder)
    throw std::out_of_range("internal generator supports orders 1.." + std::to_string(kMaxGeneratedOrder) +
                            ", got " + std::to_string(n));
  GraphStream stream{n, connected_only, StreamSource::internal_generator, {}};
  for (const Graph& g : detail::OrderCache::instance().all_of_order(n))
    if (!connected_only || is_connected(g)) stream.graphs.push_back(g);
  return stream;
}

/// Same contract as graphs_of_order, drawn from an externally supplied list:
/// graphs of other orders are skipped, duplicates up to isomorphism collapse.
inline GraphStream stream_from_graphs(const std::vector<Graph>& graphs, int n, bool connected_only) {
  std::map<CanonicalForm, Graph> seen;
  for (const Graph& g : graphs) {
    if (g.order() != n || (connected_only && !is_connected(g))) continue;
    auto [form, c] = detail::canonicalize(g);
    seen.try_emplace(std::move(form), std::move(c));
  }
  GraphStream stream{n, connected_only, StreamSource::external_graph6, {}};
  for (auto& [form, g] : seen) stream.graphs.push_back(std::move(g));
  return stream;
}

/// g plus one new vertex, over every neighbourhood (nonempty when
/// require_connected), deduplicated up to isomorphism and sorted by canonical form.
inline std::vector<Graph> one_vertex_extensions(const Graph& g, bool require_connected) {
  if (g.order() >= kMaxOrder) throw GraphError("cannot extend a graph of order 62");
  if (g.order() > 20) throw std::out_of_range("one_vertex_extensions: order above 20 is not supported");
  std::map<CanonicalForm, Graph> seen;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = require_connected ? 1 : 0; mask < limit; ++mask) {
    auto [form, c] = detail::canonicalize(g.with_vertex(VertexSet(mask)));
    seen.try_emplace(std::move(form), std::move(c));
  }
  std::vector<Graph> out;
  for (auto& [form, c] : seen) out.push_back(std::move(c));
  return out;
}

/// Source of graph streams for campaigns: the internal generator, or a fixed
/// list of graphs (e.g. read from a graph6 file).
class GraphSource {
public:
  GraphSource() = default;
  explicit GraphSource(std::vector<Graph> external) : external_(std::make_shared<std::vector<Graph>>(std::move(external))) {}

  bool is_external() const { return external_ != nullptr; }

  GraphStream of_order(int n, bool connected_only) const {
    if (external_) return stream_from_graphs(*external_, n, connected_only);
    return graphs_of_order(n, connected_only);
  }

private:
  std::shared_ptr<const std::vector<Graph>> external_;
};

}  // namespace zfkit
