#include "brauer/errors.hpp"

#include <sstream>

namespace brauer {
namespace {

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

template <typename... Ts>
std::string concat(const Ts&... parts) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << parts);
  return os.str();
}

}  // namespace

SingularMatrix::SingularMatrix(std::size_t pivot_index, double pivot_magnitude, double threshold)
    : Error(concat("singular matrix: pivot ", pivot_index, " has modulus ", pivot_magnitude,
                   " below threshold ", threshold)),
      pivot_index_(pivot_index),
      pivot_magnitude_(pivot_magnitude) {}

ResidualTooLarge::ResidualTooLarge(double residual, double tolerance)
    : Error(concat("eigenpair residual ", residual, " exceeds tolerance ", tolerance)),
      residual_(residual),
      tolerance_(tolerance) {}

LambdaNotInSpectrum::LambdaNotInSpectrum(std::complex<double> lambda, double distance,
                                         double tolerance)
    : Error(concat("eigenvalue ", format_complex(lambda), " is ", distance,
                   " from the nearest spectrum element (tolerance ", tolerance, ")")),
      lambda_(lambda),
      distance_(distance) {}

NotAnEigenvector::NotAnEigenvector(double residual, double tolerance)
    : Error(concat("x is not an eigenvector: Rayleigh residual ", residual,
                   " exceeds tolerance ", tolerance)),
      residual_(residual),
      tolerance_(tolerance) {}

NoConvergence::NoConvergence(double residual, std::size_t iterations,
                             std::optional<std::size_t> stage)
    : Error(stage ? concat("power iteration did not converge at stage ", *stage, " after ",
                           iterations, " iterations (residual ", residual, ")")
                  : concat("power iteration did not converge after ", iterations,
                           " iterations (residual ", residual, ")")),
      residual_(residual),
      iterations_(iterations),
      stage_(stage) {}

NoConvergence NoConvergence::at_stage(std::size_t stage) const {
  return NoConvergence(residual_, iterations_, stage);
}

ZeroCollision::ZeroCollision(std::complex<double> value, std::size_t stage, double tolerance)
    : Error(concat("stage ", stage, " extracted eigenvalue ", format_complex(value),
                   " within ", tolerance, " of zero; indistinguishable from an annihilated one")),
      value_(value),
      stage_(stage) {}

RootsNoConvergence::RootsNoConvergence(double worst_residual, double bound, std::size_t sweeps)
    : Error(concat("root finder did not converge after ", sweeps, " sweeps: worst residual ",
                   worst_residual, " exceeds ", bound)),
      worst_residual_(worst_residual),
      sweeps_(sweeps) {}

}  // namespace brauer
