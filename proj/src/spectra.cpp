#include "factorcover/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fcover {

std::string to_string(MatrixKind kind) {
  return kind == MatrixKind::Adjacency ? "A" : "Q";
}

std::string to_string(SpectralMethod method) {
  switch (method) {
    case SpectralMethod::FullEig: return "full-eig";
    case SpectralMethod::Power: return "power";
    case SpectralMethod::Quotient: return "quotient";
  }
  return "unknown";
}

void SymMatrix::set(int i, int j, double value) {
  entries_[static_cast<std::size_t>(i) * dim_ + j] = value;
  entries_[static_cast<std::size_t>(j) * dim_ + i] = value;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::norm_inf() const {
  double best = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (int j = 0; j < dim_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

double SymMatrix::norm_frobenius() const {
  double s = 0.0;
  for (double e : entries_) s += e * e;
  return std::sqrt(s);
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(dim_, 0.0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

SymMatrix alpha_matrix(const Graph& g, int alpha) {
  if (alpha != 0 && alpha != 1) throw std::invalid_argument("alpha must be 0 or 1");
  if (g.order() == 0) throw std::invalid_argument("spectral operations need at least one vertex");
  SymMatrix m(g.order());
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
  if (alpha == 1)
    for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
  return m;
}

SymMatrix adjacency(const Graph& g) { return alpha_matrix(g, 0); }
SymMatrix signless_laplacian(const Graph& g) { return alpha_matrix(g, 1); }

SymMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  return alpha_matrix(g, kind == MatrixKind::Adjacency ? 0 : 1);
}

EigenSystem symmetric_eigensystem(const SymMatrix& m) {
  constexpr int kSweepBudget = 100;
  constexpr double kOffTolerance = 1e-12;

  const int n = m.dim();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    v[i][i] = 1.0;
    for (int j = 0; j < n; ++j) {
      a[i][j] = m(i, j);
      if (!std::isfinite(a[i][j])) throw std::invalid_argument("matrix has non-finite entries");
    }
  }
  const double stop = kOffTolerance * std::max(1.0, m.norm_frobenius());

  EigenSystem out;
  bool converged = false;
  for (int sweep = 1; sweep <= kSweepBudget + 1; ++sweep) {
    double off = 0.0;
    double off_abs = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        off += 2.0 * a[p][q] * a[p][q];
        off_abs += std::abs(a[p][q]);
      }
    if (std::sqrt(off) <= stop) {
      out.sweeps = sweep - 1;
      converged = true;
      break;
    }
    if (sweep > kSweepBudget) break;
    const double threshold = sweep < 4 ? 0.2 * off_abs / (static_cast<double>(n) * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        const double guard = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(a[p][p]) + guard == std::abs(a[p][p]) &&
            std::abs(a[q][q]) + guard == std::abs(a[q][q])) {
          a[p][q] = a[q][p] = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold) continue;

        const double h = a[q][q] - a[p][p];
        double t;
        if (std::abs(h) + guard == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          const double ajp = a[j][p];
          const double ajq = a[j][q];
          a[j][p] = a[p][j] = ajp - s * (ajq + ajp * tau);
          a[j][q] = a[q][j] = ajq + s * (ajp - ajq * tau);
        }
        for (int j = 0; j < n; ++j) {
          const double vjp = v[j][p];
          const double vjq = v[j][q];
          v[j][p] = vjp - s * (vjq + vjp * tau);
          v[j][q] = vjq + s * (vjp - vjq * tau);
        }
      }
    }
  }
  if (!converged) throw std::runtime_error("Jacobi eigensolver did not converge within 100 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });
  for (int idx : order) {
    out.values.push_back(a[idx][idx]);
    std::vector<double> col(n);
    for (int j = 0; j < n; ++j) col[j] = v[j][idx];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const SymMatrix& m) { return symmetric_eigensystem(m).values; }

SpectralResult largest_eigenpair(const SymMatrix& m) {
  if (m.dim() == 0) throw std::invalid_argument("empty matrix has no spectrum");
  auto sys = symmetric_eigensystem(m);
  SpectralResult r;
  r.value = sys.values.back();
  r.vector = std::move(sys.vectors.back());
  r.method = SpectralMethod::FullEig;

  double norm = 0.0;
  std::size_t big = 0;
  for (std::size_t i = 0; i < r.vector.size(); ++i) {
    norm += r.vector[i] * r.vector[i];
    if (std::abs(r.vector[i]) > std::abs(r.vector[big])) big = i;
  }
  norm = std::sqrt(norm);
  const double sign = r.vector[big] < 0.0 ? -1.0 : 1.0;
  for (auto& x : r.vector) x *= sign / norm;

  const auto mx = m.multiply(r.vector);
  double res = 0.0;
  for (std::size_t i = 0; i < mx.size(); ++i) res += (mx[i] - r.value * r.vector[i]) * (mx[i] - r.value * r.vector[i]);
  r.residual = std::sqrt(res);
  return r;
}

SpectralResult lambda_alpha(const Graph& g, int alpha) {
  auto r = largest_eigenpair(alpha_matrix(g, alpha));
  if (is_connected(g)) {
    for (double x : r.vector)
      if (!(x > 1e-12)) throw std::runtime_error("Perron vector of a connected graph has a non-positive entry");
  }
  return r;
}

SpectralResult spectral_radius(const Graph& g) { return lambda_alpha(g, 0); }
SpectralResult q_radius(const Graph& g) { return lambda_alpha(g, 1); }

SpectralResult graph_radius(const Graph& g, MatrixKind kind) {
  return lambda_alpha(g, kind == MatrixKind::Adjacency ? 0 : 1);
}

bool residual_ok(const SymMatrix& m, const SpectralResult& r, double tol) {
  return r.residual <= tol * (1.0 + m.norm_inf());
}

QuotientMatrix quotient(const Graph& g, std::span<const VertexSet> parts, MatrixKind kind) {
  VertexSet covered;
  for (auto p : parts) {
    if (p.empty()) throw std::invalid_argument("quotient partition has an empty part");
    if (!(p & covered).empty()) throw std::invalid_argument("quotient parts overlap");
    covered = covered | p;
  }
  if (covered != g.vertices()) throw std::invalid_argument("quotient parts do not cover the vertex set");

  const int s = static_cast<int>(parts.size());
  QuotientMatrix q;
  q.parts.assign(parts.begin(), parts.end());
  q.b.assign(s, std::vector<double>(s, 0.0));
  q.equitable = true;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      long total = 0;
      long first = -1;
      bool constant = true;
      for (int v : parts[i].members()) {
        long row = (g.neighbors(v) & parts[j]).size();
        if (kind == MatrixKind::SignlessLaplacian && parts[j].contains(v)) row += g.degree(v);
        if (first < 0) first = row;
        constant = constant && row == first;
        total += row;
      }
      q.b[i][j] = static_cast<double>(total) / parts[i].size();
      if (!constant && q.equitable) {
        q.equitable = false;
        q.offending_block = std::make_pair(i, j);
      }
    }
  }
  return q;
}

double quotient_radius(const QuotientMatrix& q) {
  if (!q.equitable) throw std::invalid_argument("quotient_radius needs an equitable partition");
  const int s = static_cast<int>(q.parts.size());
  SymMatrix sym(s);
  for (int i = 0; i < s; ++i)
    for (int j = i; j < s; ++j)
      sym.set(i, j, q.b[i][j] * std::sqrt(static_cast<double>(q.parts[i].size()) / q.parts[j].size()));
  return symmetric_eigenvalues(sym).back();
}

double largest_root_cubic(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0) throw std::invalid_argument("largest_root_cubic needs a nonzero leading coefficient");
  const double b = c2 / c3;
  const double c = c1 / c3;
  const double d = c0 / c3;
  auto p = [&](double x) { return ((x + b) * x + c) * x + d; };
  auto dp = [&](double x) { return (3.0 * x + 2.0 * b) * x + c; };

  const double bound = 1.0 + std::max({std::abs(b), std::abs(c), std::abs(d)});
  double lo = -bound;
  double hi = bound;
  // Critical points of the monic cubic split the line into monotone pieces.
  const double disc = b * b - 3.0 * c;
  if (std::abs(disc) <= 1e-12 * (1.0 + b * b)) {
    const double flex = -b / 3.0;
    const double scale = 1e-12 * (1.0 + std::abs(flex) * std::abs(flex) * std::abs(flex) + std::abs(d));
    if (std::abs(p(flex)) <= scale) return flex;  // triple root
  }
  if (disc > 0.0) {
    const double root = std::sqrt(disc);
    const double left = (-b - root) / 3.0;
    const double right = (-b + root) / 3.0;
    const double at_right = p(right);
    const double scale = 1e-12 * (1.0 + std::abs(right) * std::abs(right) * std::abs(right) + std::abs(d));
    if (std::abs(at_right) <= scale) return right;  // double root at the local minimum
    if (at_right < 0.0)
      lo = right;
    else
      hi = left;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) > 0.0 ? hi : lo) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double slope = dp(x);
    if (slope == 0.0) break;
    const double step = p(x) / slope;
    if (x - step < lo - 1e-9 || x - step > hi + 1e-9) break;
    x -= step;
  }
  return x;
}

}  // namespace fcover
