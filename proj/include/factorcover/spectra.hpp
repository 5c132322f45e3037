#ifndef FACTORCOVER_SPECTRA_HPP
#define FACTORCOVER_SPECTRA_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "factorcover/graph.hpp"

namespace fcover {

/// Which graph matrix: A(G) or Q(G) = D(G) + A(G).
enum class MatrixKind { Adjacency, SignlessLaplacian };

std::string to_string(MatrixKind kind);

/// Dense symmetric matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, 0.0) {}

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  /// Writes both (i, j) and (j, i).
  void set(int i, int j, double value);

  double trace() const;
  double norm_inf() const;
  double norm_frobenius() const;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  int dim_ = 0;
  std::vector<double> entries_;
};

SymMatrix adjacency(const Graph& g);
SymMatrix signless_laplacian(const Graph& g);
/// alpha*D(G) + A(G) for alpha in {0, 1}.
SymMatrix alpha_matrix(const Graph& g, int alpha);
SymMatrix graph_matrix(const Graph& g, MatrixKind kind);

struct EigenSystem {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[i] belongs to values[i]
  int sweeps = 0;
};

/// Cyclic Jacobi with threshold sweeps. Stops when the off-diagonal
/// Frobenius mass drops below 1e-12 * max(1, |M|_F); throws
/// std::runtime_error after 100 sweeps.
EigenSystem symmetric_eigensystem(const SymMatrix& m);
std::vector<double> symmetric_eigenvalues(const SymMatrix& m);

enum class SpectralMethod { FullEig, Power, Quotient };
std::string to_string(SpectralMethod method);

struct SpectralResult {
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;  // |Mx - value*x|_2
  SpectralMethod method = SpectralMethod::FullEig;
};

/// Tolerance of the residual contract: residual <= tol * (1 + |M|_inf).
inline constexpr double kResidualTolerance = 1e-9;

/// Largest eigenvalue of m with a unit eigenvector whose largest-magnitude
/// entry is positive.
SpectralResult largest_eigenpair(const SymMatrix& m);

/// Largest eigenvalue of alpha*D + A. For connected graphs the vector is the
/// Perron vector and every entry is checked to exceed 1e-12.
SpectralResult lambda_alpha(const Graph& g, int alpha);
SpectralResult spectral_radius(const Graph& g);
SpectralResult q_radius(const Graph& g);
SpectralResult graph_radius(const Graph& g, MatrixKind kind);

bool residual_ok(const SymMatrix& m, const SpectralResult& r, double tol = kResidualTolerance);

struct QuotientMatrix {
  std::vector<VertexSet> parts;
  std::vector<std::vector<double>> b;  // average row sums of each block
  bool equitable = false;
  /// First block (i, j) whose row sums are not constant.
  std::optional<std::pair<int, int>> offending_block;
};

/// Quotient of A(G) or Q(G) for a partition of V(G) into nonempty parts.
/// Equitability is decided on exact integer row sums.
QuotientMatrix quotient(const Graph& g, std::span<const VertexSet> parts, MatrixKind kind);

/// Largest eigenvalue of an equitable quotient, computed on the similar
/// symmetric matrix diag(|V_i|)^{1/2} B diag(|V_i|)^{-1/2}.
double quotient_radius(const QuotientMatrix& q);

/// Largest real root of c3 x^3 + c2 x^2 + c1 x + c0, c3 != 0.
double largest_root_cubic(double c3, double c2, double c1, double c0);

}  // namespace fcover

#endif  // FACTORCOVER_SPECTRA_HPP
