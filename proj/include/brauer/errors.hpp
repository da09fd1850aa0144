#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace brauer {

// Base of every failure raised by the library. Each subclass carries the
// quantities a caller needs to report the failure without re-deriving them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t pivot_index, double pivot_magnitude, double threshold);
  std::size_t pivot_index() const noexcept { return pivot_index_; }
  double pivot_magnitude() const noexcept { return pivot_magnitude_; }

 private:
  std::size_t pivot_index_;
  double pivot_magnitude_;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class ResidualTooLarge : public Error {
 public:
  ResidualTooLarge(double residual, double tolerance);
  double residual() const noexcept { return residual_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double residual_;
  double tolerance_;
};

class LambdaNotInSpectrum : public Error {
 public:
  LambdaNotInSpectrum(std::complex<double> lambda, double distance, double tolerance);
  std::complex<double> lambda() const noexcept { return lambda_; }
  double distance() const noexcept { return distance_; }

 private:
  std::complex<double> lambda_;
  double distance_;
};

class NotAnEigenvector : public Error {
 public:
  NotAnEigenvector(double residual, double tolerance);
  double residual() const noexcept { return residual_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double residual_;
  double tolerance_;
};

class NoConvergence : public Error {
 public:
  NoConvergence(double residual, std::size_t iterations,
                std::optional<std::size_t> stage = std::nullopt);
  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }
  std::optional<std::size_t> stage() const noexcept { return stage_; }

  // Same failure, tagged with the driver stage it happened in.
  NoConvergence at_stage(std::size_t stage) const;

 private:
  double residual_;
  std::size_t iterations_;
  std::optional<std::size_t> stage_;
};

class ZeroCollision : public Error {
 public:
  ZeroCollision(std::complex<double> value, std::size_t stage, double tolerance);
  std::complex<double> value() const noexcept { return value_; }
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::complex<double> value_;
  std::size_t stage_;
};

class RootsNoConvergence : public Error {
 public:
  RootsNoConvergence(double worst_residual, double bound, std::size_t sweeps);
  double worst_residual() const noexcept { return worst_residual_; }
  std::size_t sweeps() const noexcept { return sweeps_; }

 private:
  double worst_residual_;
  std::size_t sweeps_;
};

class CardinalityMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace brauer
