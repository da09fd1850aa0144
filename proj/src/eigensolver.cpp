#include "brauer/eigensolver.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace brauer {
namespace {

// Uniform in [-1, 1) from the top 53 bits, independent of the standard
// library's distribution implementation.
double signed_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
}

PowerOptions for_stage(const PowerOptions& opts, std::size_t stage) {
  PowerOptions o = opts;
  o.seed = opts.seed + stage;
  return o;
}

EigenPair stage_pair(const Matrix& a, const PowerOptions& opts, std::size_t stage) {
  try {
    return power_iteration(a, for_stage(opts, stage));
  } catch (const NoConvergence& e) {
    throw e.at_stage(stage);
  }
}

}  // namespace

void PowerOptions::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("power iteration tolerance must be positive");
  if (max_iterations == 0) throw std::invalid_argument("power iteration needs at least one iteration");
}

Vector start_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = signed_unit(gen);
    const double im = signed_unit(gen);
    v[i] = Complex{re, im};
  }
  const double nv = norm2(v);
  if (nv == 0.0) return Vector::basis(n, 0);
  return (1.0 / nv) * v;
}

EigenPair power_iteration(const Matrix& a, const PowerOptions& opts) {
  opts.validate();
  if (!a.is_square()) {
    throw DimensionMismatch("power_iteration: matrix " + shape_string(a) + " is not square");
  }
  const double target = opts.tolerance * frobenius_norm(a);
  Vector v = start_vector(a.rows(), opts.seed);
  double residual = 0.0;
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    const Vector w = matvec(a, v);
    const Complex lambda = dot(v, w);
    residual = norm2(w - lambda * v);
    if (residual <= target) return EigenPair{lambda, v, residual};
    v = (1.0 / norm2(w)) * w;
  }
  throw NoConvergence(residual, opts.max_iterations);
}

SpectrumResult spectrum_by_deflation(const Matrix& a, const PowerOptions& opts) {
  opts.validate();
  if (!a.is_square()) {
    throw DimensionMismatch("spectrum_by_deflation: matrix " + shape_string(a) + " is not square");
  }
  SpectrumResult result;
  Matrix current = a;
  for (std::size_t stage = 0;; ++stage) {
    const std::size_t n = current.rows();
    if (n == 1) {
      result.spectrum.push_back(current(0, 0));
      result.per_stage_residuals.push_back(0.0);
      result.stages.push_back(StageRecord{current(0, 0), 0.0, 0.0, 1});
      break;
    }
    const EigenPair pair = stage_pair(current, opts, stage);
    DeflationResult d = similarity_deflate(current, pair);
    result.spectrum.push_back(d.lambda);
    result.per_stage_residuals.push_back(pair.residual);
    result.stages.push_back(StageRecord{d.lambda, pair.residual, d.block_residual, n});
    current = std::move(d.c);
  }
  return result;
}

SpectrumResult brauer_annihilate_and_continue(const Matrix& a, const PowerOptions& opts) {
  opts.validate();
  if (!a.is_square()) {
    throw DimensionMismatch("brauer_annihilate_and_continue: matrix " + shape_string(a) +
                            " is not square");
  }
  const std::size_t n = a.rows();
  const double norm_a = frobenius_norm(a);
  const double floor = opts.tolerance * norm_a;
  const double collision = 1e-6 * (1.0 + norm_a);

  SpectrumResult result;
  Matrix working = a;
  for (std::size_t stage = 0; stage < n; ++stage) {
    const EigenPair pair = stage_pair(working, opts, stage);
    const double modulus = std::abs(pair.lambda);
    if (modulus <= floor) {
      result.per_stage_residuals.push_back(pair.residual);
      result.stages.push_back(StageRecord{Complex{}, pair.residual, 0.0, n});
      while (result.spectrum.size() < n) result.spectrum.push_back(Complex{});
      break;
    }
    if (modulus <= collision) throw ZeroCollision(pair.lambda, stage, collision);
    result.spectrum.push_back(pair.lambda);
    result.per_stage_residuals.push_back(pair.residual);
    result.stages.push_back(StageRecord{pair.lambda, pair.residual, 0.0, n});
    working = shift_eigenvalue(working, pair, Complex{}).matrix;
  }
  return result;
}

}  // namespace brauer
