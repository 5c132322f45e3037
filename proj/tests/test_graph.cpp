#include <doctest.h>

#include <algorithm>
#include <random>

#include "factorcover/graph.hpp"
#include "factorcover/isomorphism.hpp"
#include "oracles.hpp"

using namespace fcover;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

Graph k2_k1_k3() { return join(complete(2), disjoint_union(empty(1), complete(3))); }

}  // namespace

TEST_CASE("constructors") {
  CHECK(complete(1).order() == 1);
  CHECK(complete(1).size() == 0);
  CHECK(complete(4).size() == 6);
  CHECK(complete(4).degrees() == std::vector<int>{3, 3, 3, 3});
  CHECK(complete(0).order() == 0);
  CHECK(star(1).size() == 1);
  CHECK(star(2).size() == 2);
  CHECK(star(2).degree(0) == 2);
  CHECK(empty(3).size() == 0);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_THROWS_AS(complete(-1), std::invalid_argument);
  CHECK_THROWS_AS(star(0), std::invalid_argument);
}

TEST_CASE("mutators keep the graph simple") {
  Graph g(4);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.size() == 1);
  CHECK(g.adjacent(1, 0));
  g.remove_edge(1, 0);
  CHECK(g.size() == 0);
}

TEST_CASE("join and union") {
  CHECK(is_isomorphic(join(complete(1), empty(5)), star(5)));
  const Graph g = k2_k1_k3();
  CHECK(g.order() == 6);
  CHECK(g.size() == 12);
  CHECK(sorted_degrees(g) == std::vector<int>{2, 4, 4, 4, 5, 5});
  CHECK(g == copies(1, g));
  CHECK(copies(3, complete(1)) == empty(3));
  CHECK(disjoint_union(complete(2), complete(2)).size() == 2);
}

TEST_CASE("induced subgraphs and deletion") {
  CHECK(remove(complete(5), VertexSet::single(1) | VertexSet::single(3)) == complete(3));
  CHECK(induced(star(3), VertexSet(0b1110)) == empty(3));
  const Graph rest = remove(k2_k1_k3(), VertexSet::range(2));
  CHECK(is_isomorphic(rest, disjoint_union(empty(1), complete(3))));
  CHECK_THROWS_AS(induced(complete(3), VertexSet::single(5)), std::invalid_argument);
}

TEST_CASE("component analysis") {
  const Graph k1k3 = disjoint_union(empty(1), complete(3));
  auto r = analyze_components(k1k3, VertexSet{});
  CHECK(r.odd_count == 2);
  CHECK(r.isolated_count == 1);
  CHECK(r.components.size() == 2);

  r = analyze_components(k2_k1_k3(), VertexSet::range(2));
  CHECK(r.odd_count == 2);
  CHECK(r.isolated_count == 1);

  r = analyze_components(complete(6), VertexSet::single(4));
  CHECK(r.odd_count == 1);
  CHECK(r.isolated_count == 0);
}

TEST_CASE("component analysis agrees with depth-first search") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    const std::uint64_t s = rng() & VertexSet::range(n).bits();
    const auto r = analyze_components(g, VertexSet(s));
    const auto expect = oracle::components_after(g, s);
    CHECK(static_cast<int>(r.components.size()) == expect[0]);
    CHECK(r.odd_count == expect[1]);
    CHECK(r.isolated_count == expect[2]);
  }
}

TEST_CASE("independence and connectivity") {
  const Graph g = k2_k1_k3();
  CHECK(is_independent(g, VertexSet{}));
  CHECK(is_independent(g, VertexSet::single(3)));
  CHECK_FALSE(is_independent(g, VertexSet::range(2)));
  CHECK(is_connected(g));
  CHECK_FALSE(is_connected(empty(2)));
  CHECK(has_isolated_vertex(disjoint_union(empty(1), complete(3))));
  CHECK_FALSE(has_isolated_vertex(g));
}

TEST_CASE("relabel") {
  const Graph p = star(2);
  const Graph q = relabel(p, {2, 0, 1});
  CHECK(q.degree(2) == 2);
  CHECK(is_isomorphic(p, q));
  CHECK_THROWS_AS(relabel(p, {0, 1}), std::invalid_argument);
}

TEST_CASE("largest order uses a full word") {
  const Graph g = complete(kMaxOrder);
  CHECK(g.size() == 64 * 63 / 2);
  CHECK(g.degree(63) == 63);
}
