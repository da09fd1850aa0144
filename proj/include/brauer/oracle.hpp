#pragma once

// Ground-truth spectra for checking everything else: characteristic
// polynomial by the Faddeev-LeVerrier trace recursion, roots by Durand-Kerner,
// and optimal-assignment matching of eigenvalue multisets. Nothing here goes
// through LU or Householder code, so those paths cannot certify themselves.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "brauer/linalg.hpp"
#include "brauer/spectrum.hpp"

namespace brauer {

struct MatchReport {
  // (index into s1, index into s2), one entry per element of s1.
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  double max_error = 0.0;
  double total_error = 0.0;
  bool matched = false;
};

namespace oracle {

inline constexpr std::size_t kMaxDimension = 16;
inline constexpr std::size_t kMaxSweeps = 500;
// Above this size the assignment switches from enumeration to Hungarian.
inline constexpr std::size_t kExhaustiveLimit = 8;

// Monic, highest degree first: coeffs[0] == 1, degree() == coeffs.size() - 1.
class PolynomialCoefficients {
 public:
  // Throws std::invalid_argument unless coeffs is non-empty and monic.
  explicit PolynomialCoefficients(std::vector<Complex> coeffs);

  // Expanded prod (z - r_i).
  static PolynomialCoefficients from_roots(std::span<const Complex> roots);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

  Complex evaluate(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
};

// det(zI - A). DimensionTooLarge above kMaxDimension.
PolynomialCoefficients char_poly(const Matrix& a);

// All roots with multiplicity; each satisfies |p(r)| <= 1e-10 (1 + max |c_k|)
// or RootsNoConvergence is thrown.
Spectrum poly_roots(const PolynomialCoefficients& p);

Spectrum eig_oracle(const Matrix& a);

// Minimum total-cost perfect matching under |s1_i - s2_j|.
MatchReport match_multisets(const Spectrum& s1, const Spectrum& s2, double tol);

// Optimal assignment for a square cost matrix (row-major, n x n); returns
// column assigned to each row. Exposed for testing the two strategies
// against each other.
std::vector<std::size_t> assign_exhaustive(std::span<const double> cost, std::size_t n);
std::vector<std::size_t> assign_hungarian(std::span<const double> cost, std::size_t n);

}  // namespace oracle
}  // namespace brauer
