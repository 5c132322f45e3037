#include "factorcover/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fcover {

std::string to_string(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::GEmpty: return "G-empty";
    case Family::GNonempty: return "G-nonempty";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "H") return Family::H;
  if (text == "G-empty") return Family::GEmpty;
  if (text == "G-nonempty") return Family::GNonempty;
  throw ParamError("unknown family '" + text + "' (expected H, G-empty or G-nonempty)");
}

std::string describe(const FamilyParams& p) {
  return to_string(p.family) + "(n=" + std::to_string(p.n) + ",k=" + std::to_string(p.k) +
         ",s=" + std::to_string(p.s) + ")";
}

void validate(const FamilyParams& p) {
  auto fail = [&](const std::string& bound) { throw ParamError(describe(p) + " violates " + bound); };
  if (p.n > kMaxOrder) fail("n <= 64");
  switch (p.family) {
    case Family::H:
      if (p.s < 1) fail("s >= 1");
      if (p.k < 0) fail("k >= 0");
      if (p.n < 2 * p.s + p.k) fail("n >= 2s+k");
      break;
    case Family::GEmpty:
      if (p.s < 1) fail("s >= 1");
      if (p.k < 2) fail("k >= 2");
      if (p.n < (p.k + 1) * p.s + 1) fail("n >= (k+1)s+1");
      break;
    case Family::GNonempty:
      if (p.s < 2) fail("s >= 2");
      if (p.k < 2) fail("k >= 2");
      if (p.n < (p.k + 1) * p.s - 2 * p.k + 2) fail("n >= (k+1)s-2k+2");
      break;
  }
}

PartSizes part_sizes(const FamilyParams& p) {
  validate(p);
  const int n = p.n, k = p.k, s = p.s;
  switch (p.family) {
    case Family::H: return {s, s + k - 1, n - 2 * s - k + 1, true};
    case Family::GEmpty: return {s, k * s + 1, n - (k + 1) * s - 1, false};
    case Family::GNonempty: return {s, k * s - 2 * k + 2, n - (k + 1) * s + 2 * k - 2, true};
  }
  return {};
}

Graph build_family(const FamilyParams& p) {
  const auto sizes = part_sizes(p);
  const Graph outer = sizes.outer_is_clique ? complete(sizes.outer) : empty(sizes.outer);
  return join(outer, disjoint_union(empty(sizes.independent), complete(sizes.clique)));
}

std::array<VertexSet, 3> family_parts(const FamilyParams& p) {
  const auto sizes = part_sizes(p);
  const auto outer = VertexSet::range(sizes.outer);
  const auto indep = VertexSet::range(sizes.outer + sizes.independent) - outer;
  const auto clique = VertexSet::range(p.n) - outer - indep;
  return {outer, indep, clique};
}

std::string to_string(Lemma l) { return "h" + std::to_string(static_cast<int>(l) + 1); }

Lemma parse_lemma(const std::string& text) {
  for (int i = 0; i < 6; ++i)
    if (text == "h" + std::to_string(i + 1)) return static_cast<Lemma>(i);
  throw ParamError("unknown lemma '" + text + "' (expected h1..h6)");
}

Family lemma_family(Lemma l) {
  switch (l) {
    case Lemma::H1:
    case Lemma::H2: return Family::H;
    case Lemma::H3:
    case Lemma::H5: return Family::GEmpty;
    case Lemma::H4:
    case Lemma::H6: return Family::GNonempty;
  }
  return Family::H;
}

MatrixKind lemma_kind(Lemma l) {
  return (l == Lemma::H1 || l == Lemma::H3 || l == Lemma::H4) ? MatrixKind::Adjacency
                                                              : MatrixKind::SignlessLaplacian;
}

Lemma lemma_for(Family f, MatrixKind kind) {
  const bool a = kind == MatrixKind::Adjacency;
  switch (f) {
    case Family::H: return a ? Lemma::H1 : Lemma::H2;
    case Family::GEmpty: return a ? Lemma::H3 : Lemma::H5;
    case Family::GNonempty: return a ? Lemma::H4 : Lemma::H6;
  }
  return Lemma::H1;
}

int lemma_claimed_maximizer(Lemma l) { return lemma_family(l) == Family::GEmpty ? 1 : 2; }

int lemma_min_order(Lemma l, int k) {
  switch (l) {
    case Lemma::H1: return 5 * k + 6;
    case Lemma::H2: return 5 * k + 7;
    case Lemma::H3: return (3 * k + 1) / 2 + 5;  // ceil(3k/2) + 5
    case Lemma::H4: return k + 7;
    case Lemma::H5: return 2 * k + 4;
    case Lemma::H6: return 2 * k + 6;
  }
  return 0;
}

std::vector<int> lemma_s_range(Lemma l, int n, int k) {
  int lo = 0, hi = -1;
  switch (lemma_family(l)) {
    case Family::H:
      lo = 2;
      hi = (n - k) / 2;
      break;
    case Family::GEmpty:
      lo = 1;
      hi = (n - 1) / (k + 1);
      break;
    case Family::GNonempty:
      lo = 2;
      hi = (n + 2 * k - 2) / (k + 1);
      break;
  }
  std::vector<int> out;
  for (int s = lo; s <= hi; ++s) out.push_back(s);
  return out;
}

double CubicCoeffs::largest_root() const {
  return largest_root_cubic(static_cast<double>(c[0]), static_cast<double>(c[1]), static_cast<double>(c[2]),
                            static_cast<double>(c[3]));
}

CubicCoeffs transcribed_poly(Lemma which, const FamilyParams& p) {
  if (lemma_family(which) != p.family)
    throw ParamError(to_string(which) + " describes family " + to_string(lemma_family(which)) + ", got " +
                     to_string(p.family));
  validate(p);
  const long long n = p.n, k = p.k, s = p.s;
  const long long s2 = s * s, s3 = s2 * s;
  CubicCoeffs f;
  f.source = PolySource::Transcribed;
  switch (which) {
    case Lemma::H1:
      f.c = {1, -(n - k - s - 1), -(n + s2 + (k - 2) * s - k),
             -2 * s3 + (n - 3 * k + 2) * s2 + ((k - 1) * n - k * k + k) * s};
      break;
    case Lemma::H2:
      f.c = {1, -(3 * n - 2 * k - s - 2), -(4 * s2 - (n - 4 * k + 4) * s - 2 * n * n + 2 * (k + 2) * n - 4 * k),
             -2 * s3 + (4 * n - 4 * k - 2) * s2 - (2 * n * n - 2 * (2 * k + 1) * n + 2 * k * k + 2 * k) * s};
      break;
    case Lemma::H3:
      f.c = {1, -(n - s - k * s - 2), -(n * s - s2),
             -(k * k + k) * s3 + (k * n - 3 * k - 1) * s2 + (n - 2) * s};
      break;
    case Lemma::H4:
      f.c = {1, -(n + 2 * k - k * s - 4), -(n + k * s2 - (3 * k - 2) * s + 2 * k - 3),
             -(k * k + k) * s3 + (k * n + 4 * k * k - 3 * k - 2) * s2 -
                 (2 * (k - 1) * n + 4 * k * k - 10 * k + 6) * s};
      break;
    case Lemma::H5:
      f.c = {1, -(3 * n - (2 * k + 1) * s - 4), 2 * n * n - 4 * n - (2 * k + 1) * n * s,
             -(2 * k * k + 4 * k + 2) * s3 + (4 * (k + 1) * n - 6 * k - 6) * s2 - (2 * n * n - 6 * n + 4) * s};
      break;
    case Lemma::H6:
      f.c = {1, -(3 * n - (2 * k - 1) * s + 4 * k - 8),
             2 * n * n + (4 * k - 10) * n - 4 * k * s2 - ((2 * k - 3) * n - 12 * k + 12) * s - 8 * k + 12,
             -2 * k * k * s3 + (4 * k * n + 8 * k * k - 14 * k) * s2 -
                 (2 * n * n + (8 * k - 14) * n + 8 * k * k - 28 * k + 24) * s};
      break;
  }
  return f;
}

std::array<std::array<long long, 3>, 3> family_quotient(const FamilyParams& p, MatrixKind kind) {
  const auto sz = part_sizes(p);
  const long long s = sz.outer, a = sz.independent, b = sz.clique;
  const long long inner = sz.outer_is_clique ? s - 1 : 0;
  std::array<std::array<long long, 3>, 3> m = {{{inner, a, b}, {s, 0, 0}, {s, 0, b - 1}}};
  if (kind == MatrixKind::SignlessLaplacian) {
    m[0][0] += inner + a + b;
    m[1][1] += s;
    m[2][2] += s + b - 1;
  }

  // Rows of nonempty parts must agree with the equitable quotient of the built graph.
  const Graph g = build_family(p);
  const auto parts = family_parts(p);
  std::vector<VertexSet> nonempty;
  std::vector<int> index;
  for (int i = 0; i < 3; ++i)
    if (!parts[i].empty()) {
      nonempty.push_back(parts[i]);
      index.push_back(i);
    }
  const auto q = quotient(g, nonempty, kind);
  if (!q.equitable) throw std::logic_error("natural partition of " + describe(p) + " is not equitable");
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j)
      if (std::llround(q.b[i][j]) != m[index[i]][index[j]])
        throw std::logic_error("quotient of " + describe(p) + " disagrees with the part structure");
  return m;
}

CubicCoeffs quotient_poly(const FamilyParams& p, MatrixKind kind) {
  const auto m = family_quotient(p, kind);
  const long long trace = m[0][0] + m[1][1] + m[2][2];
  const long long minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                           (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  const long long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  CubicCoeffs f;
  f.source = PolySource::QuotientDerived;
  f.c = {1, -trace, minors, -det};
  return f;
}

double ExtremalValue::discrepancy() const { return std::abs(value - transcribed_root); }

ExtremalValue extremal_value(const FamilyParams& p, MatrixKind kind) {
  ExtremalValue out;
  out.value = quotient_poly(p, kind).largest_root();
  out.transcribed_root = transcribed_poly(lemma_for(p.family, kind), p).largest_root();
  return out;
}

ScanReport scan_maximizer(Lemma which, int n, int k) {
  const Family fam = lemma_family(which);
  if (fam == Family::H ? k < 0 : k < 2)
    throw ParamError(to_string(which) + " needs k >= " + (fam == Family::H ? "0" : "2"));
  if (n < lemma_min_order(which, k))
    throw ParamError(to_string(which) + " needs n >= " + std::to_string(lemma_min_order(which, k)) +
                     " for k=" + std::to_string(k));
  const auto range = lemma_s_range(which, n, k);
  if (range.empty()) throw ParamError(to_string(which) + ": empty s-range");

  ScanReport r;
  r.lemma = which;
  r.n = n;
  r.k = k;
  r.claimed = lemma_claimed_maximizer(which);
  for (int s : range) r.points.push_back({s, quotient_poly({n, k, s, fam}, lemma_kind(which)).largest_root()});

  const auto best = std::max_element(r.points.begin(), r.points.end(),
                                     [](const ScanPoint& x, const ScanPoint& y) { return x.value < y.value; });
  r.argmax = best->s;
  r.gap = std::numeric_limits<double>::infinity();
  for (const auto& pt : r.points)
    if (pt.s != best->s) r.gap = std::min(r.gap, best->value - pt.value);
  r.passed = r.argmax == r.claimed && r.gap > 1e-9;
  return r;
}

}  // namespace fcover
