#include "brauer/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace brauer::oracle {
namespace {

// Extended precision for the recursion and the root iteration; inputs and
// outputs stay double.
using Wide = std::complex<long double>;

constexpr long double kWideEpsilon = std::numeric_limits<long double>::epsilon();

Wide widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(Wide z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

Wide horner(std::span<const Complex> coeffs, Wide z) {
  Wide acc{};
  for (const Complex& c : coeffs) acc = acc * z + widen(c);
  return acc;
}

double residual_bound(std::span<const Complex> coeffs) {
  return 1e-10 * (1.0 + max_modulus(coeffs));
}

}  // namespace

PolynomialCoefficients::PolynomialCoefficients(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  if (coeffs_.front() != Complex{1.0, 0.0}) {
    throw std::invalid_argument("polynomial must be monic");
  }
  require_finite(coeffs_, "polynomial");
}

PolynomialCoefficients PolynomialCoefficients::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{1.0};
  for (const Complex& r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] -= r * c[k - 1];
  }
  return PolynomialCoefficients(std::move(c));
}

Complex PolynomialCoefficients::evaluate(Complex z) const {
  return narrow(horner(coeffs_, widen(z)));
}

PolynomialCoefficients char_poly(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("char_poly: matrix " + shape_string(a) + " not square");
  const std::size_t n = a.rows();
  if (n > kMaxDimension) {
    throw DimensionTooLarge("char_poly: dimension " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxDimension));
  }

  std::vector<Wide> wa(n * n);
  for (std::size_t i = 0; i < n * n; ++i) wa[i] = widen(a.entries()[i]);

  // M_1 = I; c_k = -tr(A M_k) / k; M_{k+1} = A M_k + c_k I.
  std::vector<Wide> m(n * n), am(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0L;

  std::vector<Complex> coeffs(n + 1);
  coeffs[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::fill(am.begin(), am.end(), Wide{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        const Wide ail = wa[i * n + l];
        for (std::size_t j = 0; j < n; ++j) am[i * n + j] += ail * m[l * n + j];
      }
    }
    Wide tr{};
    for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
    const Wide ck = -tr / static_cast<long double>(k);
    coeffs[k] = narrow(ck);
    m = am;
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += ck;
  }
  return PolynomialCoefficients(std::move(coeffs));
}

Spectrum poly_roots(const PolynomialCoefficients& p) {
  const std::size_t n = p.degree();
  if (n == 0) throw std::invalid_argument("poly_roots: degree must be at least 1");
  if (n > kMaxDimension) {
    throw DimensionTooLarge("poly_roots: degree " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxDimension));
  }
  const auto coeffs = p.coeffs();

  std::vector<Wide> z(n);
  const Wide seed{0.4L, 0.9L};
  Wide power{1.0L, 0.0L};
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = power;
    power *= seed;
  }

  std::size_t sweeps = 0;
  if (n == 1) {
    z[0] = -widen(coeffs[1]);
  } else {
    for (; sweeps < kMaxSweeps; ++sweeps) {
      long double worst = 0.0L;
      for (std::size_t k = 0; k < n; ++k) {
        Wide denom{1.0L, 0.0L};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) denom *= z[k] - z[j];
        }
        if (denom == Wide{}) denom = Wide{kWideEpsilon, 0.0L};
        const Wide step = horner(coeffs, z[k]) / denom;
        z[k] -= step;
        worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
      }
      if (worst <= 8.0L * kWideEpsilon) {
        ++sweeps;
        break;
      }
    }
  }

  const double bound = residual_bound(coeffs);
  double worst_residual = 0.0;
  std::vector<Complex> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    roots[k] = narrow(z[k]);
    const double r = static_cast<double>(std::abs(horner(coeffs, widen(roots[k]))));
    if (!std::isfinite(r)) {
      worst_residual = std::numeric_limits<double>::infinity();
    } else {
      worst_residual = std::max(worst_residual, r);
    }
  }
  if (!(worst_residual <= bound)) throw RootsNoConvergence(worst_residual, bound, sweeps);
  return Spectrum(std::move(roots));
}

Spectrum eig_oracle(const Matrix& a) { return poly_roots(char_poly(a)); }

std::vector<std::size_t> assign_exhaustive(std::span<const double> cost, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += cost[i * n + perm[i]];
    if (total < best_cost) {
      best_cost = total;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Shortest augmenting path with row/column potentials, O(n^3). Rows and
// columns are 1-based internally; column 0 is the virtual start.
std::vector<std::size_t> assign_hungarian(std::span<const double> cost, std::size_t n) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match_of_col(n + 1, 0), way(n + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    match_of_col[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t i0 = match_of_col[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = col0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          col1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      col0 = col1;
    } while (match_of_col[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match_of_col[col0] = match_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[match_of_col[j] - 1] = j - 1;
  return assignment;
}

MatchReport match_multisets(const Spectrum& s1, const Spectrum& s2, double tol) {
  if (s1.size() != s2.size()) {
    throw CardinalityMismatch("match_multisets: sizes " + std::to_string(s1.size()) + " and " +
                              std::to_string(s2.size()) + " differ");
  }
  const std::size_t n = s1.size();
  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = std::abs(s1[i] - s2[j]);
  }
  const auto assignment = n <= kExhaustiveLimit ? assign_exhaustive(cost, n)
                                                : assign_hungarian(cost, n);
  MatchReport report;
  report.pairing.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = cost[i * n + assignment[i]];
    report.pairing.emplace_back(i, assignment[i]);
    report.max_error = std::max(report.max_error, d);
    report.total_error += d;
  }
  report.matched = report.max_error <= tol;
  return report;
}

}  // namespace brauer::oracle
