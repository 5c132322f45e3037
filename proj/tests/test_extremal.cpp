#include <doctest.h>

#include <algorithm>
#include <random>

#include "factorcover/extremal.hpp"
#include "factorcover/isomorphism.hpp"
#include "oracles.hpp"

using namespace fcover;

TEST_CASE("family construction") {
  const Graph h = build_family({6, 0, 2, Family::H});
  CHECK(h.size() == 12);
  auto d = h.degrees();
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<int>{2, 4, 4, 4, 5, 5});
  CHECK(is_isomorphic(h, join(complete(2), disjoint_union(empty(1), complete(3)))));

  const Graph gn = build_family({8, 2, 2, Family::GNonempty});
  CHECK(gn.order() == 8);
  CHECK(is_isomorphic(gn, join(complete(2), disjoint_union(empty(2), complete(4)))));

  const Graph ge = build_family({8, 2, 1, Family::GEmpty});
  CHECK(is_isomorphic(ge, join(complete(1), disjoint_union(empty(3), complete(4)))));
  // For s >= 2 the outer part is independent.
  const Graph ge2 = build_family({10, 2, 2, Family::GEmpty});
  CHECK(is_independent(ge2, VertexSet::range(2)));
}

TEST_CASE("parameter bounds are named") {
  CHECK_THROWS_WITH_AS(validate({5, 0, 3, Family::H}), doctest::Contains("n >= 2s+k"), ParamError);
  CHECK_THROWS_WITH_AS(validate({10, 1, 1, Family::GEmpty}), doctest::Contains("k >= 2"), ParamError);
  CHECK_THROWS_WITH_AS(validate({10, 2, 1, Family::GNonempty}), doctest::Contains("s >= 2"), ParamError);
  CHECK_THROWS_WITH_AS(validate({6, 2, 2, Family::GEmpty}), doctest::Contains("(k+1)s+1"), ParamError);
  CHECK_THROWS_WITH_AS(validate({70, 0, 2, Family::H}), doctest::Contains("64"), ParamError);
  CHECK_THROWS_AS(parse_family("K"), ParamError);
  CHECK(parse_family("G-empty") == Family::GEmpty);
  CHECK(parse_lemma("h5") == Lemma::H5);
  CHECK_THROWS_AS(parse_lemma("h7"), ParamError);
}

TEST_CASE("printed polynomial coefficients") {
  const auto f = transcribed_poly(Lemma::H1, {6, 0, 2, Family::H});
  CHECK(f.c == std::array<long long, 4>{1, -3, -6, 4});
  for (int n = 10; n < 20; ++n) {
    const int k = 1, s = 2;
    CHECK(transcribed_poly(Lemma::H1, {n, k, s, Family::H}).c2() == -(n - k - s - 1));
    CHECK(transcribed_poly(Lemma::H2, {n, k, s, Family::H}).c2() == -(3 * n - 2 * k - s - 2));
  }
  CHECK_THROWS_AS(transcribed_poly(Lemma::H3, {6, 0, 2, Family::H}), ParamError);
}

TEST_CASE("quotient polynomial against Faddeev-LeVerrier and dense spectra") {
  CHECK(quotient_poly({6, 0, 2, Family::H}, MatrixKind::Adjacency).c == std::array<long long, 4>{1, -3, -6, 4});
  const auto m = family_quotient({6, 0, 2, Family::H}, MatrixKind::Adjacency);
  CHECK(m == std::array<std::array<long long, 3>, 3>{{{1, 1, 3}, {2, 0, 0}, {2, 0, 2}}});

  std::mt19937_64 rng(19);
  int checked = 0;
  while (checked < 150) {
    FamilyParams p{static_cast<int>(rng() % 30), static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5),
                   static_cast<Family>(rng() % 3)};
    try {
      validate(p);
    } catch (const ParamError&) {
      continue;
    }
    ++checked;
    const Graph g = build_family(p);
    for (auto kind : {MatrixKind::Adjacency, MatrixKind::SignlessLaplacian}) {
      const auto poly = quotient_poly(p, kind);
      CHECK(poly.c == oracle::charpoly3(family_quotient(p, kind)));
      const double dense = oracle::radius(g, kind == MatrixKind::Adjacency ? 0.0 : 1.0);
      CHECK(std::abs(poly.largest_root() - dense) <= 1e-8 * (1 + dense));
    }
  }
}

TEST_CASE("printed polynomials equal the quotient-derived ones") {
  for (int li = 0; li < 6; ++li) {
    const auto l = static_cast<Lemma>(li);
    const int k = lemma_family(l) == Family::H ? 1 : 2;
    const int n = lemma_min_order(l, k) + 3;
    for (int s : lemma_s_range(l, n, k)) {
      const FamilyParams p{n, k, s, lemma_family(l)};
      CHECK_MESSAGE(transcribed_poly(l, p).same_coefficients(quotient_poly(p, lemma_kind(l))), to_string(l), " ",
                    describe(p));
    }
  }
}

TEST_CASE("extremal values") {
  const auto v = extremal_value({6, 0, 2, Family::H}, MatrixKind::Adjacency);
  CHECK(v.value == doctest::Approx(4.2014723382).epsilon(1e-9));
  CHECK(v.discrepancy() < 1e-12);
  // The family contains K_{n-k-1} (H) or K_{n-2} (G-nonempty, s=2).
  for (int n = 8; n <= 20; ++n) {
    for (int k = 0; k <= 2; ++k)
      if (n >= 4 + k) CHECK(extremal_value({n, k, 2, Family::H}, MatrixKind::Adjacency).value > n - k - 2);
    CHECK(extremal_value({n, 2, 2, Family::GNonempty}, MatrixKind::Adjacency).value > n - 3);
  }
}

TEST_CASE("maximizer scans") {
  auto r = scan_maximizer(Lemma::H1, 16, 2);
  CHECK(r.points.size() == 6);
  CHECK(r.points.front().s == 2);
  CHECK(r.points.back().s == 7);
  CHECK(r.argmax == 2);
  CHECK(r.passed);

  r = scan_maximizer(Lemma::H3, 20, 2);
  CHECK(r.points.front().s == 1);
  CHECK(r.points.back().s == 6);
  CHECK(r.argmax == 1);
  CHECK(r.passed);

  r = scan_maximizer(Lemma::H6, 10, 2);
  CHECK(r.argmax == 2);
  CHECK(r.passed);

  CHECK_THROWS_AS(scan_maximizer(Lemma::H1, 10, 2), ParamError);
}
