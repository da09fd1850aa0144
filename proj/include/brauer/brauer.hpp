#pragma once

// Rank-one eigenvalue perturbation and the similarity deflation behind it.
//
// If (lambda, x) is an eigenpair of A and y is any vector, A + x y* has the
// spectrum of A with one copy of lambda replaced by lambda + y* x. The
// constructive argument completes x to an invertible Q = [x R]; then
//
//     Q^-1 A Q = [ lambda  u* ]
//                [ 0       C  ]
//
// so sigma(A) = {lambda} U sigma(C). Everything here is exact in exact
// arithmetic; in floating point the zero block is reported as a residual.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brauer/linalg.hpp"
#include "brauer/oracle.hpp"
#include "brauer/spectrum.hpp"

namespace brauer {

struct EigenPair {
  Complex lambda;
  Vector x;
  // ||A x - lambda x||_2 / ||x||_2 against the matrix the pair came from.
  double residual = 0.0;

  // Builds a pair and measures its residual against a.
  static EigenPair certify(const Matrix& a, Complex lambda, Vector x);
};

// ||A x - lambda x||_2 / ||x||_2. Throws ZeroVector for x == 0.
double eigen_residual(const Matrix& a, Complex lambda, const Vector& x);

// x* A x / x* x.
Complex rayleigh_quotient(const Matrix& a, const Vector& x);

struct DeflationResult {
  Complex lambda;
  // Conjugate column u of the coupling row u*, length n - 1.
  Vector u_star;
  Matrix c;
  Matrix q;
  // 2-norm of the first column of Q^-1 A Q below its head.
  double block_residual = 0.0;
};

enum class CompletionKind {
  // Unitary Householder reflector; Q^-1 = Q*.
  householder,
  // Identity with the first column replaced by x, inverted through LU.
  naive,
};

struct DeflationOptions {
  CompletionKind completion = CompletionKind::householder;
  // Residual gate as a multiple of ||a||_F.
  double residual_tolerance = 1e-8;
};

// A + x y*. Returns a unchanged, bit for bit, when y == 0.
Matrix brauer_update(const Matrix& a, const Vector& x, const Vector& y);

// y* x = sum_j conj(y_j) x_j.
Complex inner_y_star_x(const Vector& x, const Vector& y);

// Default tolerance for locating lambda in a spectrum: 1e-6 (1 + max |sigma_i|).
double default_spectral_tolerance(const Spectrum& sigma);

// sigma with the element nearest lambda (lowest index on ties) replaced by
// lambda + inner. LambdaNotInSpectrum if that element is farther than tol.
Spectrum predict_spectrum(const Spectrum& sigma, Complex lambda, Complex inner,
                          std::optional<double> tol = std::nullopt);

// Unitary Q whose first column is x / ||x||_2 times a unit-modulus scalar:
// the Householder reflector mapping x to alpha e_1 with
// alpha = -sign(x_0) ||x||_2, sign(0) = 1.
Matrix completion(const Vector& x);

// Identity with column k swapped out for x, where k maximizes |x_k|; its
// first column is exactly x.
Matrix naive_completion(const Vector& x);

DeflationResult similarity_deflate(const Matrix& a, const EigenPair& pair,
                                   const DeflationOptions& opts = {});

struct ShiftResult {
  Matrix matrix;
  Vector y;
};

// Moves the eigenvalue of pair to mu with the minimum-norm y satisfying
// y* x = mu - lambda, namely y = conj((mu - lambda) / ||x||^2) x.
ShiftResult shift_eigenvalue(const Matrix& a, const EigenPair& pair, Complex mu,
                             double residual_tolerance = 1e-8);

struct VerificationReport {
  Complex lambda;
  double eigen_residual = 0.0;
  Complex y_star_x;
  Spectrum sigma_a;
  Spectrum sigma_updated;
  Spectrum predicted;
  MatchReport match;
  // Distance from lambda to the nearest element of sigma_a.
  double lambda_distance = 0.0;
  // Both lambda_distance and match.max_error must be within tolerance * scale.
  double tolerance = 0.0;
  double scale = 1.0;
  bool passed = false;
  // Empty when passed.
  std::string failure_reason;
};

// Checks the perturbation rule end to end against the independent oracle.
// lambda is the Rayleigh quotient of x; NotAnEigenvector if its residual
// exceeds tol. The spectra match if the optimal pairing's largest distance is
// at most tol * (1 + ||A||_F + ||x|| ||y||).
VerificationReport verify_brauer(const Matrix& a, const Vector& x, const Vector& y, double tol);

}  // namespace brauer
