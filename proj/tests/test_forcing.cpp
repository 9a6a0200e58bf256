#include <random>

#include "catch_amalgamated.hpp"
#include "zfkit/catalog.hpp"
#include "zfkit/enumerate.hpp"
#include "zfkit/forcing.hpp"
#include "zfkit/verify.hpp"

using namespace zfkit;
namespace cat = zfkit::catalog;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (edge(rng)) es.emplace_back(u, v);
  return Graph::build(n, es);
}

// Forces fired one at a time, the next force picked uniformly among all available ones.
VertexSet random_order_closure(const Graph& g, VertexSet s, std::mt19937& rng) {
  for (;;) {
    std::vector<Vertex> targets;
    for (Vertex v : s) {
      const VertexSet white = g.neighbors(v) - s;
      if (white.size() == 1) targets.push_back(white.first());
    }
    if (targets.empty()) return s;
    s.insert(targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)]);
  }
}

// Largest failed set by scanning all 2^n subsets.
int failed_number_by_scan(const Graph& g) {
  std::mt19937 rng(0);
  int best = -1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
    const VertexSet s(m);
    if (s.size() > best && random_order_closure(g, s, rng) != g.vertices()) best = s.size();
  }
  return best;
}

}  // namespace

TEST_CASE("closure examples") {
  const Graph p3 = cat::path(3);
  auto c = closure(p3, VertexSet::single(1));
  CHECK(c.final_set == VertexSet::single(1));
  CHECK(c.trace.steps.empty());
  CHECK(c.stalled_immediately);

  c = closure(p3, VertexSet::single(0));
  CHECK(c.final_set == VertexSet::range(3));
  CHECK(c.trace.steps == std::vector<Force>{{0, 1, 1}, {1, 2, 2}});
  CHECK_FALSE(c.stalled_immediately);

  CHECK(closure(cat::complete(3), VertexSet::single(0)).final_set == VertexSet::single(0));
}

TEST_CASE("closure trace replays to the final set") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 8, 0.35);
    const VertexSet s(rng() & 0xff);
    const auto c = closure(g, s);
    VertexSet replay = s;
    int last_round = 0;
    for (const Force& f : c.trace.steps) {
      REQUIRE(replay.contains(f.forcer));
      REQUIRE_FALSE(replay.contains(f.forced));
      REQUIRE(f.round >= last_round);
      last_round = f.round;
      replay.insert(f.forced);
    }
    CHECK(replay == c.final_set);
    CHECK(closure_set(g, s) == c.final_set);
  }
}

TEST_CASE("is_failed_set") {
  CHECK(is_failed_set(cat::cycle(5), VertexSet(0b00101)));
  CHECK_FALSE(is_failed_set(cat::cycle(5), VertexSet(0b00011)));
  CHECK(is_failed_set(cat::complete(2), VertexSet()));
}

TEST_CASE("zero forcing number") {
  CHECK(zero_forcing_number(cat::path(4)) == 1);
  CHECK(zero_forcing_number(cat::complete(4)) == 3);
  CHECK(zero_forcing_number(cat::cycle(5)) == 2);
  CHECK(zero_forcing_number(Graph()) == 1);
  CHECK(zero_forcing_number(cat::star(4)) == 3);
  CHECK(is_zero_forcing_set(cat::cycle(5), minimum_zero_forcing_set(cat::cycle(5))));
}

TEST_CASE("failed zero forcing number named values") {
  CHECK(failed_zero_forcing_number(cat::path(4)) == 1);
  CHECK(failed_zero_forcing_number(cat::cycle(5)) == 2);
  CHECK(failed_zero_forcing_number(Graph()) == 0);
  CHECK(failed_zero_forcing_number(cat::complete(2)) == 0);
  CHECK(failed_zero_forcing_number(gap_construction(10).g) == 8);
}

TEST_CASE("min_fort") {
  const VertexSet p4 = min_fort(cat::path(4));
  CHECK(p4.size() == 3);
  CHECK(p4 == VertexSet(0b1011));
  CHECK(is_fort(cat::path(4), p4));
  CHECK(min_fort(cat::cycle(5)).size() == 3);
  CHECK(min_fort(cat::complete(2)) == VertexSet(0b11));
  CHECK_FALSE(is_fort(cat::path(4), VertexSet()));
}

TEST_CASE("true_blue") {
  CHECK(true_blue(cat::complete(3), VertexSet(0b111)) == VertexSet(0b111));
  CHECK(true_blue(cat::complete(3), VertexSet(0b011)).empty());
  // P6 on 0..5 with a pendant 6 on the end vertex 0; v1, v3, v5 are 0, 2, 4.
  const Graph p6_pendant = cat::path(6).with_vertex(VertexSet::single(0));
  CHECK(true_blue(p6_pendant, VertexSet(0b10101)).empty());
}

TEST_CASE("find_stalled_set") {
  CHECK(find_stalled_set(cat::cycle(5), 2, true) == VertexSet(0b00101));
  CHECK_FALSE(find_stalled_set(cat::path(6), 3, false).has_value());
  const Graph p6_pendant = cat::path(6).with_vertex(VertexSet::single(0));
  const auto s = find_stalled_set(p6_pendant, 3, true);
  REQUIRE(s.has_value());
  CHECK(is_stalled(p6_pendant, *s));
  CHECK(true_blue(p6_pendant, *s).empty());
  CHECK(is_stalled(p6_pendant, VertexSet(0b10101)));
}

TEST_CASE("closure is monotone, idempotent and confluent on random graphs") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.7)(rng));
    const std::uint64_t full = g.vertices().bits();
    const VertexSet s(rng() & full);
    const VertexSet t = s | VertexSet(rng() & full);
    const VertexSet cs = closure_set(g, s);
    CHECK(cs.subset_of(closure_set(g, t)));
    CHECK(closure_set(g, cs) == cs);
    for (int k = 0; k < 20; ++k) REQUIRE(random_order_closure(g, s, rng) == cs);
  }
}

TEST_CASE("F by fort search equals F by subset scan, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_of_order(n, false)) {
      const int scan = failed_number_by_scan(g);
      REQUIRE(failed_zero_forcing_number(g) == scan);
      REQUIRE(failed_zero_forcing_number_brute_force(g) == scan);
    }
}

TEST_CASE("upper bounds on F") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : graphs_of_order(n, false)) {
      const int f = failed_zero_forcing_number(g);
      REQUIRE(f <= n - 1);
      if (n >= 2 && is_connected(g)) REQUIRE(f <= n - 2);
    }
}

TEST_CASE("stalled set has no true blue iff every member sees two outside vertices") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_of_order(n, false))
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const VertexSet s(m);
        if (!is_stalled(g, s)) continue;
        bool two_outside = true;
        for (Vertex v : s) two_outside = two_outside && (g.neighbors(v) - s).size() >= 2;
        REQUIRE(true_blue(g, s).empty() == two_outside);
      }
}

TEST_CASE("closure monotone on random pairs over every graph with n <= 6") {
  std::mt19937 rng(6);
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_of_order(n, false)) {
      const std::uint64_t full = g.vertices().bits();
      for (int k = 0; k < 10; ++k) {
        const VertexSet s(rng() & full);
        const VertexSet t = s | VertexSet(rng() & full);
        REQUIRE(closure_set(g, s).subset_of(closure_set(g, t)));
      }
    }
}
