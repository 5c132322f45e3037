#ifndef FACTORCOVER_EXTREMAL_HPP
#define FACTORCOVER_EXTREMAL_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorcover/graph.hpp"
#include "factorcover/spectra.hpp"

namespace fcover {

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The three join families used as extremal graphs.
///   H:          K_s  v ((s+k-1)K_1  u K_{n-2s-k+1})
///   GEmpty:     sK_1 v ((ks+1)K_1   u K_{n-(k+1)s-1})
///   GNonempty:  K_s  v ((ks-2k+2)K_1 u K_{n-(k+1)s+2k-2})
enum class Family { H, GEmpty, GNonempty };

std::string to_string(Family f);
Family parse_family(const std::string& text);

struct FamilyParams {
  int n = 0;
  int k = 0;
  int s = 0;
  Family family = Family::H;
};

std::string describe(const FamilyParams& p);

/// Sizes of the outer part, the independent part and the clique part.
struct PartSizes {
  int outer = 0;
  int independent = 0;
  int clique = 0;
  bool outer_is_clique = true;
};

/// Throws ParamError naming the violated bound.
void validate(const FamilyParams& p);
PartSizes part_sizes(const FamilyParams& p);

/// Vertices 0..s-1 form the outer part, then the independent part, then the clique.
Graph build_family(const FamilyParams& p);
/// The natural partition {outer, independent, clique}; empty parts are kept.
std::array<VertexSet, 3> family_parts(const FamilyParams& p);

/// The six cubic characteristic polynomials f_s(x).
/// h1/h2: family H (A, Q); h3/h5: GEmpty (A, Q); h4/h6: GNonempty (A, Q).
enum class Lemma { H1, H2, H3, H4, H5, H6 };

std::string to_string(Lemma l);
Lemma parse_lemma(const std::string& text);
Family lemma_family(Lemma l);
MatrixKind lemma_kind(Lemma l);
Lemma lemma_for(Family f, MatrixKind kind);
/// The s the lemma claims as unique maximizer (2 for h1, h2, h4, h6; 1 for h3, h5).
int lemma_claimed_maximizer(Lemma l);
/// Smallest n of the lemma's hypothesis for this k (the k-only part of the max).
int lemma_min_order(Lemma l, int k);
/// Legal s for fixed (n, k), ascending. Empty when none.
std::vector<int> lemma_s_range(Lemma l, int n, int k);

enum class PolySource { Transcribed, QuotientDerived };

/// Coefficients of c3 x^3 + c2 x^2 + c1 x + c0, exact integers.
struct CubicCoeffs {
  std::array<long long, 4> c{};  // {c3, c2, c1, c0}
  PolySource source = PolySource::QuotientDerived;

  long long c3() const { return c[0]; }
  long long c2() const { return c[1]; }
  long long c1() const { return c[2]; }
  long long c0() const { return c[3]; }
  double largest_root() const;
  bool same_coefficients(const CubicCoeffs& o) const { return c == o.c; }
};

/// Coefficients exactly as printed for each lemma.
CubicCoeffs transcribed_poly(Lemma which, const FamilyParams& p);

/// 3x3 integer quotient matrix of the natural partition. Rows of nonempty
/// parts are read off the built graph and required to be equitable; a row
/// for an empty part is the row a member of that part would have.
std::array<std::array<long long, 3>, 3> family_quotient(const FamilyParams& p, MatrixKind kind);

/// Characteristic polynomial det(xI - B) of family_quotient, by cofactor expansion.
CubicCoeffs quotient_poly(const FamilyParams& p, MatrixKind kind);

struct ExtremalValue {
  double value = 0.0;             // largest root of quotient_poly
  double transcribed_root = 0.0;  // largest root of the printed polynomial
  double discrepancy() const;
};

ExtremalValue extremal_value(const FamilyParams& p, MatrixKind kind);

struct ScanPoint {
  int s = 0;
  double value = 0.0;
};

struct ScanReport {
  Lemma lemma = Lemma::H1;
  int n = 0;
  int k = 0;
  std::vector<ScanPoint> points;
  int argmax = 0;
  int claimed = 0;
  double gap = 0.0;  // value(argmax) - runner-up; +inf with a single legal s
  bool passed = false;
};

/// Evaluates the lemma's family over every legal s. Passes when the claimed
/// s is the strict maximizer by more than 1e-9. Throws ParamError when n is
/// below the lemma bound or the s-range is empty.
ScanReport scan_maximizer(Lemma which, int n, int k);

}  // namespace fcover

#endif  // FACTORCOVER_EXTREMAL_HPP
