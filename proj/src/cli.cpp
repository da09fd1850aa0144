#include "brauer/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/brauer.hpp"
#include "brauer/eigensolver.hpp"
#include "brauer/matrix_io.hpp"
#include "brauer/oracle.hpp"

namespace brauer::cli {
namespace {

using Json = nlohmann::ordered_json;

// Raised by the commands for conformance failures; carries the file name.
struct DimensionProblem : Error {
  using Error::Error;
};

std::string literal(Complex z) { return io::format_complex(z); }

Json literals(const Spectrum& s) {
  Json arr = Json::array();
  for (const Complex& z : s) arr.push_back(literal(z));
  return arr;
}

Json literals(const Vector& v) {
  Json arr = Json::array();
  for (const Complex& z : v) arr.push_back(literal(z));
  return arr;
}

void require_square(const Matrix& a, const std::string& path, std::size_t min_dim = 1) {
  if (!a.is_square()) {
    throw DimensionProblem(path + ": matrix is " + shape_string(a) + ", expected square");
  }
  if (a.rows() < min_dim) {
    throw DimensionProblem(path + ": matrix is " + shape_string(a) + ", needs at least " +
                           std::to_string(min_dim) + " rows");
  }
}

void require_length(const Vector& v, std::size_t n, const std::string& path) {
  if (v.size() != n) {
    throw DimensionProblem(path + ": vector has length " + std::to_string(v.size()) +
                           ", matrix needs " + std::to_string(n));
  }
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DimensionProblem& e) {
    err << "error: " << e.what() << "\n";
    return kDimensionError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kDimensionError;
  } catch (const DimensionTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return kDimensionError;
  } catch (const DimensionTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kDimensionError;
  } catch (const NotAnEigenvector& e) {
    err << "error: " << e.what() << "\n";
    return kNotAnEigenvector;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const RootsNoConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const ZeroCollision& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const ResidualTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

struct Options {
  std::string a_path, x_path, y_path, out_path, mu_text;
  std::string method = "oracle";
  double tol = 1e-10;
  double verify_tol = 1e-9;
  std::uint64_t seed = PowerOptions{}.seed;
  int digits = 12;
  bool naive = false;
  double demo_shift = 2.0;
};

PowerOptions power_options(const Options& o) {
  PowerOptions p;
  p.tolerance = o.tol;
  p.seed = o.seed;
  return p;
}

int cmd_update(const Options& o, std::ostream& out) {
  const Matrix a = io::read_matrix(o.a_path);
  const Vector x = io::read_vector(o.x_path);
  const Vector y = io::read_vector(o.y_path);
  require_square(a, o.a_path);
  require_length(x, a.rows(), o.x_path);
  require_length(y, a.rows(), o.y_path);

  const Matrix updated = brauer_update(a, x, y);
  io::write_matrix(o.out_path, updated);

  const Complex inner = inner_y_star_x(x, y);
  Json report;
  report["command"] = "update";
  report["output"] = o.out_path;
  report["y_star_x"] = literal(inner);
  if (!x.is_zero()) {
    const Complex lambda = rayleigh_quotient(a, x);
    const double residual = eigen_residual(a, lambda, x);
    const bool eigen = residual <= DeflationOptions{}.residual_tolerance * frobenius_norm(a);
    report["x_is_eigenvector"] = eigen;
    report["eigen_residual"] = residual;
    if (eigen) {
      report["lambda"] = literal(lambda);
      report["predicted_lambda"] = literal(lambda + inner);
    }
  } else {
    report["x_is_eigenvector"] = false;
  }
  out << report.dump() << "\n";
  return kOk;
}

int cmd_deflate(const Options& o, std::ostream& out) {
  const Matrix a = io::read_matrix(o.a_path);
  require_square(a, o.a_path, 2);
  const EigenPair pair = power_iteration(a, power_options(o));
  DeflationOptions dopts;
  if (o.naive) dopts.completion = CompletionKind::naive;
  const DeflationResult d = similarity_deflate(a, pair, dopts);
  io::write_matrix(o.out_path, d.c);

  Json report;
  report["command"] = "deflate";
  report["output"] = o.out_path;
  report["lambda"] = literal(d.lambda);
  report["block_residual"] = d.block_residual;
  report["per_stage_residual"] = pair.residual;
  report["completion"] = o.naive ? "naive" : "householder";
  out << report.dump() << "\n";
  return kOk;
}

int cmd_shift(const Options& o, std::ostream& out) {
  const Complex mu = [&] {
    try {
      return io::parse_complex(o.mu_text);
    } catch (const io::ParseError& e) {
      throw io::ParseError(std::string("mu: ") + e.what());
    }
  }();
  const Matrix a = io::read_matrix(o.a_path);
  require_square(a, o.a_path);
  const EigenPair pair = power_iteration(a, power_options(o));
  const ShiftResult shifted = shift_eigenvalue(a, pair, mu);
  io::write_matrix(o.out_path, shifted.matrix);

  Json report;
  report["command"] = "shift";
  report["output"] = o.out_path;
  report["lambda"] = literal(pair.lambda);
  report["mu"] = literal(mu);
  report["eigen_residual"] = pair.residual;
  report["y"] = literals(shifted.y);
  out << report.dump() << "\n";
  return kOk;
}

int cmd_eigs(const Options& o, std::ostream& out) {
  const Matrix a = io::read_matrix(o.a_path);
  require_square(a, o.a_path);
  Spectrum s;
  if (o.method == "oracle") {
    s = oracle::eig_oracle(a);
  } else if (o.method == "deflation") {
    s = spectrum_by_deflation(a, power_options(o)).spectrum;
  } else {
    s = brauer_annihilate_and_continue(a, power_options(o)).spectrum;
  }
  for (const std::string& line : display_spectrum(s, o.digits)) out << line << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Matrix a = io::read_matrix(o.a_path);
  const Vector x = io::read_vector(o.x_path);
  const Vector y = io::read_vector(o.y_path);
  require_square(a, o.a_path);
  require_length(x, a.rows(), o.x_path);
  require_length(y, a.rows(), o.y_path);

  const VerificationReport r = verify_brauer(a, x, y, o.verify_tol);
  Json report;
  report["command"] = "verify";
  report["passed"] = r.passed;
  report["lambda"] = literal(r.lambda);
  report["eigen_residual"] = r.eigen_residual;
  report["y_star_x"] = literal(r.y_star_x);
  report["sigma_a"] = literals(r.sigma_a);
  report["sigma_updated"] = literals(r.sigma_updated);
  report["predicted"] = literals(r.predicted);
  Json pairing = Json::array();
  for (const auto& [i, j] : r.match.pairing) pairing.push_back(Json::array({i, j}));
  report["pairing"] = pairing;
  report["max_error"] = r.match.max_error;
  report["total_error"] = r.match.total_error;
  report["lambda_distance"] = r.lambda_distance;
  report["tolerance"] = r.tolerance;
  report["scale"] = r.scale;
  if (!r.passed) report["failure"] = r.failure_reason;
  out << report.dump(2) << "\n";
  return r.passed ? kOk : kCheckFailed;
}

// Perron root of a nonnegative matrix moved by a rank-one update along its
// nonnegative eigenvector; for shift >= 0 the update keeps every entry
// nonnegative.
int cmd_demo(const Options& o, std::ostream& out) {
  const Matrix a{{2, 1, 1}, {1, 2, 1}, {0, 1, 3}};
  const Vector ones{1, 1, 1};
  const Complex perron = 4.0;
  const EigenPair pair = EigenPair::certify(a, perron, ones);
  const Complex target = perron + o.demo_shift;
  const ShiftResult shifted = shift_eigenvalue(a, pair, target);

  const Spectrum before = oracle::eig_oracle(a);
  const Spectrum after = oracle::eig_oracle(shifted.matrix);

  auto print_spectrum = [&](const Spectrum& s) {
    for (const std::string& line : display_spectrum(s, o.digits)) out << "  " << line << "\n";
  };

  out << "nonnegative matrix with row sums 4; Perron pair (4, (1,1,1))\n";
  out << "eigen residual: " << pair.residual << "\n";
  out << "before:\n" << io::format_matrix(a);
  out << "spectrum before:\n";
  print_spectrum(before);
  out << "shift Perron root by " << o.demo_shift << " with y:\n";
  out << io::format_vector(shifted.y);
  out << "after:\n" << io::format_matrix(shifted.matrix);
  out << "spectrum after:\n";
  print_spectrum(after);

  Complex root_after = after[0];
  for (const Complex& z : after) {
    if (std::abs(z - target) < std::abs(root_after - target)) root_after = z;
  }
  const double error = std::abs(root_after - target);
  bool nonnegative = true;
  for (const Complex& z : shifted.matrix.entries()) {
    nonnegative = nonnegative && z.real() >= 0.0 && z.imag() == 0.0;
  }
  const bool ok = error <= 1e-8;
  out << "perron root: " << literal(perron) << " -> " << io::format_rounded(root_after, o.digits)
      << " (expected " << literal(target) << ", error " << error << ")\n";
  out << "remains nonnegative: " << (nonnegative ? "yes" : "no") << "\n";
  out << "identical matrices: " << (shifted.matrix == a ? "yes" : "no") << "\n";
  out << (ok ? "check passed" : "check FAILED") << "\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace

std::vector<std::string> display_spectrum(const Spectrum& s, int significant_digits) {
  struct Entry {
    Complex value;
    std::string text;
  };
  std::vector<Entry> entries;
  entries.reserve(s.size());
  for (const Complex& z : s) {
    std::string text = io::format_rounded(z, significant_digits);
    entries.push_back({io::parse_complex(text), std::move(text)});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    const double ml = std::abs(l.value);
    const double mr = std::abs(r.value);
    if (ml != mr) return ml > mr;
    return std::arg(l.value) < std::arg(r.value);
  });
  std::vector<std::string> lines;
  lines.reserve(entries.size());
  for (Entry& e : entries) lines.push_back(std::move(e.text));
  return lines;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-one eigenvalue perturbation and deflation toolkit", "brauer"};
  app.require_subcommand(1);
  Options o;

  auto* update = app.add_subcommand("update", "Write A + x y* and report y* x");
  update->add_option("A", o.a_path, "matrix file")->required();
  update->add_option("x", o.x_path, "vector file")->required();
  update->add_option("y", o.y_path, "vector file")->required();
  update->add_option("out", o.out_path, "output matrix file")->required();

  auto* deflate = app.add_subcommand("deflate", "Deflate the dominant eigenvalue; write C");
  deflate->add_option("A", o.a_path, "matrix file")->required();
  deflate->add_option("out", o.out_path, "output matrix file for C")->required();
  deflate->add_option("--tol", o.tol, "power iteration tolerance")->capture_default_str();
  deflate->add_option("--seed", o.seed, "start vector seed")->capture_default_str();
  deflate->add_flag("--naive-completion", o.naive, "use [x e_j...] instead of Householder");

  auto* shift = app.add_subcommand("shift", "Move the dominant eigenvalue to mu");
  shift->add_option("A", o.a_path, "matrix file")->required();
  shift->add_option("mu", o.mu_text, "target eigenvalue literal")->required();
  shift->add_option("out", o.out_path, "output matrix file")->required();
  shift->add_option("--tol", o.tol, "power iteration tolerance")->capture_default_str();
  shift->add_option("--seed", o.seed, "start vector seed")->capture_default_str();

  auto* eigs = app.add_subcommand("eigs", "Print the spectrum");
  eigs->add_option("A", o.a_path, "matrix file")->required();
  eigs->add_option("--method", o.method, "oracle | deflation | annihilate")
      ->default_val("oracle")
      ->check(CLI::IsMember({"oracle", "deflation", "annihilate"}));
  eigs->add_option("--tol", o.tol, "power iteration tolerance")->capture_default_str();
  eigs->add_option("--seed", o.seed, "start vector seed")->capture_default_str();
  eigs->add_option("--digits", o.digits, "significant digits printed")
      ->default_val(12)
      ->check(CLI::Range(1, 17));

  auto* verify = app.add_subcommand("verify", "Check the perturbation rule against the oracle");
  verify->add_option("A", o.a_path, "matrix file")->required();
  verify->add_option("x", o.x_path, "eigenvector file")->required();
  verify->add_option("y", o.y_path, "vector file")->required();
  verify->add_option("--tol", o.verify_tol, "eigenvector and matching tolerance")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Shift the Perron root of a nonnegative matrix");
  demo->add_option("--shift", o.demo_shift, "amount added to the Perron root")->default_val(2.0);

  std::vector<const char*> argv{"brauer"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  return guarded(
      [&] {
        if (update->parsed()) return cmd_update(o, out);
        if (deflate->parsed()) return cmd_deflate(o, out);
        if (shift->parsed()) return cmd_shift(o, out);
        if (eigs->parsed()) return cmd_eigs(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        return cmd_demo(o, out);
      },
      err);
}

}  // namespace brauer::cli
