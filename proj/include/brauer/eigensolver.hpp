#pragma once

// Desk-scale spectra by repeated dominant-eigenpair extraction. Two drivers:
// spectrum_by_deflation shrinks the problem through the similarity
// Q* A Q = [lambda u*; 0 C] and recurses on C; brauer_annihilate_and_continue
// keeps the size fixed and moves each extracted eigenvalue to zero with a
// rank-one update.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "brauer/brauer.hpp"

namespace brauer {

struct PowerOptions {
  std::size_t max_iterations = 10000;
  // Convergence when ||A v - lambda v|| <= tolerance * ||A||_F.
  double tolerance = 1e-10;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument on a non-positive tolerance or zero iterations.
  void validate() const;
};

struct StageRecord {
  Complex lambda;
  // Power-iteration residual of the stage's eigenpair.
  double residual = 0.0;
  // Zero block norm of the similarity step; zero for annihilation stages.
  double block_residual = 0.0;
  // Side of the working matrix at this stage.
  std::size_t dimension = 0;
};

struct SpectrumResult {
  Spectrum spectrum;
  std::vector<double> per_stage_residuals;
  std::vector<StageRecord> stages;
};

// Unit-norm pseudo-random complex start vector, fully determined by seed.
Vector start_vector(std::size_t n, std::uint64_t seed);

// Dominant eigenpair; lambda is the Rayleigh quotient of the final iterate.
// NoConvergence when the residual has not met the tolerance after
// max_iterations, which is the expected outcome for a modulus tie.
EigenPair power_iteration(const Matrix& a, const PowerOptions& opts = {});

// Stage k runs power iteration (seed + k) on an (n - k) x (n - k) block and
// deflates it; the last stage reads off the remaining 1 x 1 block. Failures
// carry the stage index.
SpectrumResult spectrum_by_deflation(const Matrix& a, const PowerOptions& opts = {});

// Each stage extracts the dominant pair of the working matrix and shifts its
// eigenvalue to 0 in place. Stops after n stages or once the dominant modulus
// is at most tolerance * ||A||_F, in which case the rest of the spectrum is
// zero. ZeroCollision when an extracted eigenvalue is above that floor but
// within 1e-6 (1 + ||A||_F) of zero.
SpectrumResult brauer_annihilate_and_continue(const Matrix& a, const PowerOptions& opts = {});

}  // namespace brauer
