#include "brauer/brauer.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace brauer {
namespace {

void require_conformant(const Matrix& a, const Vector& v, const char* op, const char* name) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(op) + ": matrix " + shape_string(a) + " is not square");
  }
  if (v.size() != a.rows()) {
    throw DimensionMismatch(std::string(op) + ": " + name + " has length " +
                            std::to_string(v.size()) + ", matrix is " + shape_string(a));
  }
}

// x / ||x||_2 computed without squaring the raw entries.
Vector normalized(const Vector& x) {
  const double scale = max_modulus(x.entries());
  if (scale == 0.0) throw ZeroVector("vector is zero");
  const Vector z = (1.0 / scale) * x;
  return (1.0 / norm2(z)) * z;
}

Complex unit_sign(Complex z) {
  const double m = std::abs(z);
  return m == 0.0 ? Complex{1.0, 0.0} : z / m;
}

std::size_t nearest_index(const Spectrum& sigma, Complex lambda, double& distance) {
  std::size_t best = 0;
  distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const double d = std::abs(sigma[i] - lambda);
    if (d < distance) {
      distance = d;
      best = i;
    }
  }
  return best;
}

}  // namespace

double eigen_residual(const Matrix& a, Complex lambda, const Vector& x) {
  require_conformant(a, x, "eigen_residual", "x");
  const Vector u = normalized(x);
  return norm2(matvec(a, u) - lambda * u);
}

Complex rayleigh_quotient(const Matrix& a, const Vector& x) {
  require_conformant(a, x, "rayleigh_quotient", "x");
  const Vector u = normalized(x);
  return dot(u, matvec(a, u));
}

EigenPair EigenPair::certify(const Matrix& a, Complex lambda, Vector x) {
  const double r = eigen_residual(a, lambda, x);
  return EigenPair{lambda, std::move(x), r};
}

Matrix brauer_update(const Matrix& a, const Vector& x, const Vector& y) {
  require_conformant(a, x, "brauer_update", "x");
  require_conformant(a, y, "brauer_update", "y");
  if (y.is_zero()) return a;
  return a + outer(x, y);
}

Complex inner_y_star_x(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("inner_y_star_x: lengths " + std::to_string(x.size()) + " and " +
                            std::to_string(y.size()) + " differ");
  }
  return dot(y, x);
}

double default_spectral_tolerance(const Spectrum& sigma) {
  return 1e-6 * (1.0 + max_modulus(sigma.values()));
}

Spectrum predict_spectrum(const Spectrum& sigma, Complex lambda, Complex inner,
                          std::optional<double> tol) {
  const double limit = tol.value_or(default_spectral_tolerance(sigma));
  double distance = 0.0;
  const std::size_t k = nearest_index(sigma, lambda, distance);
  if (sigma.size() == 0 || distance > limit) throw LambdaNotInSpectrum(lambda, distance, limit);
  std::vector<Complex> values(sigma.begin(), sigma.end());
  values[k] = lambda + inner;
  return Spectrum(std::move(values));
}

Matrix completion(const Vector& x) {
  const std::size_t n = x.size();
  if (n == 0) throw DimensionMismatch("completion: empty vector");
  const double scale = max_modulus(x.entries());
  if (scale == 0.0) throw ZeroVector("completion: x is the zero vector");
  const Vector z = (1.0 / scale) * x;
  // ||z|| >= 1 after scaling; this only trips for vectors that vanish
  // relative to their own largest entry, which cannot happen.
  const double nz = norm2(z);
  if (nz < static_cast<double>(n) * kEpsilon) throw ZeroVector("completion: x is numerically zero");
  const Vector u = (1.0 / nz) * z;

  // H = I - 2 v v* / (v* v), v = u - alpha e_1, alpha = -sign(u_0).
  // H u = alpha e_1, so H e_1 = u / alpha.
  Vector v = u;
  v[0] += unit_sign(u[0]);
  const double vnorm = norm2(v);
  const double vv = vnorm * vnorm;

  Matrix q = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q(i, j) -= 2.0 * v[i] * std::conj(v[j]) / vv;
  }
  return q;
}

Matrix naive_completion(const Vector& x) {
  const std::size_t n = x.size();
  if (n == 0) throw DimensionMismatch("naive_completion: empty vector");
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(x[i]) > std::abs(x[k])) k = i;
  }
  if (x[k] == Complex{}) throw ZeroVector("naive_completion: x is the zero vector");
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) q(i, 0) = x[i];
  std::size_t col = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    q(j, col++) = 1.0;
  }
  return q;
}

DeflationResult similarity_deflate(const Matrix& a, const EigenPair& pair,
                                   const DeflationOptions& opts) {
  require_conformant(a, pair.x, "similarity_deflate", "eigenvector");
  const std::size_t n = a.rows();
  if (n < 2) throw DimensionTooSmall("similarity_deflate: needs n >= 2, got " + std::to_string(n));

  const double gate = opts.residual_tolerance * frobenius_norm(a);
  const double residual = eigen_residual(a, pair.lambda, pair.x);
  if (residual > gate) throw ResidualTooLarge(residual, gate);

  Matrix q;
  Matrix m;
  if (opts.completion == CompletionKind::householder) {
    q = completion(pair.x);
    m = matmul(conj_transpose(q), matmul(a, q));
  } else {
    q = naive_completion(pair.x);
    m = lu_solve(lu_factor(q), matmul(a, q));
  }

  DeflationResult result;
  result.lambda = m(0, 0);
  result.u_star = Vector(n - 1);
  Vector sub(n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    result.u_star[j - 1] = std::conj(m(0, j));
    sub[j - 1] = m(j, 0);
  }
  result.c = m.block(1, 1, n - 1, n - 1);
  result.q = std::move(q);
  result.block_residual = norm2(sub);
  return result;
}

ShiftResult shift_eigenvalue(const Matrix& a, const EigenPair& pair, Complex mu,
                             double residual_tolerance) {
  require_conformant(a, pair.x, "shift_eigenvalue", "eigenvector");
  if (pair.x.is_zero()) throw ZeroVector("shift_eigenvalue: eigenvector is zero");
  const double gate = residual_tolerance * frobenius_norm(a);
  const double residual = eigen_residual(a, pair.lambda, pair.x);
  if (residual > gate) throw ResidualTooLarge(residual, gate);

  const std::size_t n = a.rows();
  if (mu == pair.lambda) return ShiftResult{a, Vector(n)};
  const double nx = norm2(pair.x);
  const Complex coefficient = std::conj((mu - pair.lambda) / nx / nx);
  Vector y = coefficient * pair.x;
  Matrix shifted = brauer_update(a, pair.x, y);
  return ShiftResult{std::move(shifted), std::move(y)};
}

VerificationReport verify_brauer(const Matrix& a, const Vector& x, const Vector& y, double tol) {
  require_conformant(a, x, "verify_brauer", "x");
  require_conformant(a, y, "verify_brauer", "y");

  VerificationReport report;
  report.tolerance = tol;
  report.lambda = rayleigh_quotient(a, x);
  report.eigen_residual = eigen_residual(a, report.lambda, x);
  if (!(report.eigen_residual <= tol)) throw NotAnEigenvector(report.eigen_residual, tol);

  report.y_star_x = inner_y_star_x(x, y);
  report.scale = 1.0 + frobenius_norm(a) + norm2(x) * norm2(y);
  report.sigma_a = oracle::eig_oracle(a);
  report.sigma_updated = oracle::eig_oracle(brauer_update(a, x, y));

  nearest_index(report.sigma_a, report.lambda, report.lambda_distance);
  report.predicted = predict_spectrum(report.sigma_a, report.lambda, report.y_star_x,
                                      std::numeric_limits<double>::infinity());
  const double limit = tol * report.scale;
  report.match = oracle::match_multisets(report.sigma_updated, report.predicted, limit);

  std::ostringstream why;
  why.precision(6);
  if (report.lambda_distance > limit) {
    why << "Rayleigh quotient lies " << report.lambda_distance
        << " from the oracle spectrum of A (limit " << limit << ")";
  } else if (!report.match.matched) {
    why << "oracle spectrum of A + xy* differs from the prediction by " << report.match.max_error
        << " (limit " << limit << ")";
  }
  report.failure_reason = why.str();
  report.passed = report.failure_reason.empty();
  return report;
}

}  // namespace brauer
