#include <doctest.h>

#include <cmath>
#include <random>

#include "factorcover/spectra.hpp"
#include "oracles.hpp"

using namespace fcover;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int density_in_8) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 8) < density_in_8) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("matrix builders") {
  const auto a = adjacency(complete(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a(i, j) == (i == j ? 0.0 : 1.0));
  const auto q = signless_laplacian(star(1));
  CHECK(q(0, 0) == 1.0);
  CHECK(q(0, 1) == 1.0);
  CHECK(q(1, 1) == 1.0);
  const Graph s3 = star(3);
  const auto q3 = signless_laplacian(s3);
  for (int v = 0; v < 4; ++v) CHECK(q3(v, v) == s3.degree(v));
  CHECK_THROWS_AS(alpha_matrix(s3, 2), std::invalid_argument);
  CHECK_THROWS_AS(alpha_matrix(Graph(0), 0), std::invalid_argument);
}

TEST_CASE("closed-form spectra") {
  const auto kn = symmetric_eigenvalues(adjacency(complete(7)));
  for (int i = 0; i < 6; ++i) CHECK(kn[i] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(kn[6] == doctest::Approx(6.0).epsilon(1e-12));

  const int m = 5;
  const auto ks = symmetric_eigenvalues(adjacency(star(m)));
  CHECK(ks.front() == doctest::Approx(-std::sqrt(m)).epsilon(1e-12));
  CHECK(ks.back() == doctest::Approx(std::sqrt(m)).epsilon(1e-12));
  for (int i = 1; i < m; ++i) CHECK(std::abs(ks[i]) < 1e-12);
}

TEST_CASE("eigenvalues agree with an independent solver") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = random_graph(rng, n, 1 + static_cast<int>(rng() % 7));
    for (int alpha : {0, 1}) {
      const auto m = alpha_matrix(g, alpha);
      const auto sys = symmetric_eigensystem(m);
      const auto ref = oracle::eigenvalues(g, alpha);
      double sum = 0;
      for (int i = 0; i < n; ++i) {
        CHECK(std::abs(sys.values[i] - ref[i]) < 1e-9);
        sum += sys.values[i];
      }
      CHECK(std::abs(sum - m.trace()) < 1e-9);
    }
  }
}

TEST_CASE("radius contract") {
  const int n = 9, k = 1;
  CHECK(spectral_radius(complete(n - k - 1)).value == doctest::Approx(n - k - 2).epsilon(1e-12));
  CHECK(q_radius(complete(n - k - 1)).value == doctest::Approx(2 * n - 2 * k - 4).epsilon(1e-12));
  for (int m = 1; m <= 12; ++m)
    for (int alpha : {0, 1})
      CHECK(lambda_alpha(complete(m), alpha).value == doctest::Approx((alpha + 1) * (m - 1)).epsilon(1e-12));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 15), 4);
    for (int alpha : {0, 1}) {
      const auto r = lambda_alpha(g, alpha);
      CHECK(residual_ok(alpha_matrix(g, alpha), r));
      CHECK(r.method == SpectralMethod::FullEig);
      CHECK(std::abs(r.value - oracle::radius(g, alpha)) < 1e-9);
      if (is_connected(g))
        for (double x : r.vector) CHECK(x > 0.0);
    }
  }
}

TEST_CASE("quotient of an equitable partition") {
  const int n = 9, k = 1, s = 2;
  Graph g = join(complete(s), disjoint_union(empty(s + k - 1), complete(n - 2 * s - k + 1)));
  const std::vector<VertexSet> parts = {VertexSet::range(s), VertexSet::range(2 * s + k - 1) - VertexSet::range(s),
                                        VertexSet::range(n) - VertexSet::range(2 * s + k - 1)};
  const auto qa = quotient(g, parts, MatrixKind::Adjacency);
  REQUIRE(qa.equitable);
  const std::vector<std::vector<double>> ba = {
      {s - 1.0, s + k - 1.0, n - 2.0 * s - k + 1}, {1.0 * s, 0, 0}, {1.0 * s, 0, n - 2.0 * s - k}};
  CHECK(qa.b == ba);
  const auto qq = quotient(g, parts, MatrixKind::SignlessLaplacian);
  const std::vector<std::vector<double>> bq = {
      {n + s - 2.0, s + k - 1.0, n - 2.0 * s - k + 1}, {1.0 * s, 1.0 * s, 0}, {1.0 * s, 0, 2.0 * n - 3 * s - 2 * k}};
  CHECK(qq.b == bq);
  CHECK(quotient_radius(qa) == doctest::Approx(spectral_radius(g).value).epsilon(1e-10));
  CHECK(quotient_radius(qq) == doctest::Approx(q_radius(g).value).epsilon(1e-10));
}

TEST_CASE("singleton partition reproduces the matrix; bad partitions") {
  const Graph g = star(3);
  std::vector<VertexSet> singles;
  for (int v = 0; v < 4; ++v) singles.push_back(VertexSet::single(v));
  const auto q = quotient(g, singles, MatrixKind::SignlessLaplacian);
  CHECK(q.equitable);
  const auto m = signless_laplacian(g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(q.b[i][j] == m(i, j));

  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  const std::vector<VertexSet> halves = {VertexSet(0b0011), VertexSet(0b1100)};
  const auto bad = quotient(p4, halves, MatrixKind::Adjacency);
  CHECK_FALSE(bad.equitable);
  CHECK(bad.offending_block.has_value());
  CHECK_THROWS_AS(quotient_radius(bad), std::invalid_argument);

  const std::vector<VertexSet> overlap = {VertexSet(0b0011), VertexSet(0b0110), VertexSet(0b1000)};
  CHECK_THROWS_AS(quotient(p4, overlap, MatrixKind::Adjacency), std::invalid_argument);
  const std::vector<VertexSet> missing = {VertexSet(0b0011)};
  CHECK_THROWS_AS(quotient(p4, missing, MatrixKind::Adjacency), std::invalid_argument);
}

TEST_CASE("largest cubic root") {
  const double r = largest_root_cubic(1, -3, -6, 4);
  CHECK(r == doctest::Approx(4.2014723382).epsilon(1e-9));
  CHECK(std::abs(((r - 3) * r - 6) * r + 4) < 1e-9);
  const Graph h = join(complete(2), disjoint_union(empty(1), complete(3)));
  CHECK(std::abs(r - spectral_radius(h).value) < 1e-10);
  CHECK(largest_root_cubic(1, 0, -1, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(largest_root_cubic(1, -15, 75, -125) - 5.0) < 1e-9);
  // Double root at the larger critical point: (x-2)^2 (x+1).
  CHECK(std::abs(largest_root_cubic(1, -3, 0, 4) - 2.0) < 1e-7);
  CHECK_THROWS_AS(largest_root_cubic(0, 1, 1, 1), std::invalid_argument);
}
