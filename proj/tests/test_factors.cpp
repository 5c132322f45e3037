#include <doctest.h>

#include <random>

#include "factorcover/factors.hpp"
#include "factorcover/isomorphism.hpp"
#include "oracles.hpp"

using namespace fcover;

namespace {

Graph k2_k1_k3() { return join(complete(2), disjoint_union(empty(1), complete(3))); }

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("maximum matching") {
  CHECK(max_matching(complete(6)).size() == 3);
  CHECK(max_matching(star(5)).size() == 1);
  const auto m = max_matching(k2_k1_k3());
  CHECK(m.size() == 3);
  validate_matching(k2_k1_k3(), m);
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_graphs(n)) CHECK(max_matching(g).size() == oracle::max_matching_size(g));
}

TEST_CASE("certificate validators reject bad certificates") {
  const Graph g = path(4);
  CHECK_THROWS_AS(validate_matching(g, Matching{{{0, 1}, {1, 2}}}), std::logic_error);
  CHECK_THROWS_AS(validate_matching(g, Matching{{{0, 2}}}), std::logic_error);
  CHECK_THROWS_AS(validate_star_forest(g, StarForest{{{0, VertexSet(0b0010)}}}, 2), std::logic_error);
  validate_star_forest(g, StarForest{{{0, VertexSet(0b0010)}, {3, VertexSet(0b0100)}}}, 2);
  CHECK_THROWS_AS(validate_star_forest(star(3), StarForest{{{0, VertexSet(0b1110)}}}, 2), std::logic_error);
}

TEST_CASE("matching through an edge") {
  for (auto e : complete(6).edges()) CHECK(has_matching_through_edge(complete(6), 0, e));
  const Graph g = k2_k1_k3();
  CHECK_FALSE(has_matching_through_edge(g, 0, {0, 1}));
  CHECK(has_matching_through_edge(g, 0, {0, 3}));
  CHECK_THROWS_AS(has_matching_through_edge(g, 1, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(has_matching_through_edge(g, 0, {2, 3}), std::invalid_argument);
}

TEST_CASE("matching-covered decider") {
  CHECK(is_matching_covered(complete(6), 0).holds);
  const auto v = is_matching_covered(k2_k1_k3(), 0);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness_edge.has_value());
  CHECK(*v.witness_edge == Edge{0, 1});
  CHECK(is_matching_covered(empty(4), 4).holds);
  CHECK_FALSE(is_matching_covered(empty(4), 2).holds);
  const auto p4 = is_matching_covered(path(4), 0);
  CHECK_FALSE(p4.holds);
  CHECK(*p4.witness_edge == Edge{1, 2});
}

TEST_CASE("matching-covered decider agrees with matching enumeration") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_graphs(n))
      for (int k = n % 2; k <= n; k += 2) {
        const auto v = is_matching_covered(g, k);
        CHECK(v.holds == oracle::matching_covered(g, k));
        if (v.holds) validate_matching(g, std::get<Matching>(v.certificate));
      }
}

TEST_CASE("matching criterion") {
  const auto v = lemma_matching_criterion(k2_k1_k3(), 0);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness_set.has_value());
  CHECK(*v.witness_set == VertexSet::range(2));
  CHECK(lemma_matching_criterion(complete(6), 0).holds);
  CHECK(lemma_matching_criterion(empty(2), 2).holds);
  const auto p4 = lemma_matching_criterion(path(4), 0);
  CHECK_FALSE(p4.holds);
  CHECK(*p4.witness_set == VertexSet(0b0110));
}

TEST_CASE("star factor through an edge") {
  for (auto e : complete(6).edges()) CHECK(star_factor_through_edge(complete(6), 2, e));
  const Graph g = join(complete(2), disjoint_union(empty(2), complete(2)));
  CHECK_FALSE(star_factor_through_edge(g, 2, {0, 1}));
  for (auto e : star(2).edges()) CHECK(star_factor_through_edge(star(2), 2, e));
  const auto f = find_star_factor_through_edge(complete(5), 2, {1, 3});
  REQUIRE(f.has_value());
  validate_star_forest(complete(5), *f, 2);
}

TEST_CASE("star-covered decider") {
  CHECK(is_star_covered(complete(6), 2).holds);
  const auto v = is_star_covered(join(complete(2), disjoint_union(empty(2), complete(4))), 2);
  CHECK_FALSE(v.holds);
  CHECK(v.witness_edge.has_value());
  CHECK(is_star_covered(disjoint_union(star(1), star(1)), 2).holds);
  CHECK_THROWS_AS(is_star_covered(empty(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(is_star_covered(complete(3), 1), std::invalid_argument);
}

TEST_CASE("star-covered decider agrees with assignment enumeration") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      if (has_isolated_vertex(g)) continue;
      for (int k : {2, 3}) {
        const auto v = is_star_covered(g, k);
        CHECK(v.holds == oracle::star_covered(g, k));
        if (v.holds) validate_star_forest(g, std::get<StarForest>(v.certificate), k);
      }
    }
}

TEST_CASE("isolated-vertex criterion") {
  const auto v = cek_criterion(join(complete(2), disjoint_union(empty(2), complete(4))), 2);
  CHECK_FALSE(v.holds);
  CHECK(*v.witness_set == VertexSet::range(2));
  CHECK(cek_criterion(complete(6), 2).holds);
  CHECK(cek_criterion(path(5), 2).holds);
}
