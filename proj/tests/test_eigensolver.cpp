#include <doctest.h>

#include <cmath>
#include <cstring>

#include "brauer/eigensolver.hpp"
#include "brauer/oracle.hpp"
#include "support/generators.hpp"

using namespace brauer;
using brauer::testing::Rng;

namespace {

bool spectra_match(const Spectrum& s1, const Spectrum& s2, double tol) {
  return oracle::match_multisets(s1, s2, tol).matched;
}

Matrix diag(std::vector<Complex> d) { return Matrix::diagonal(d); }

// V diag(d) V^-1 with the fixed unimodular V used throughout the fixtures.
Matrix similar_to(std::vector<Complex> d) {
  const Matrix v{{1, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  return matmul(matmul(v, Matrix::diagonal(d)), lu_solve(lu_factor(v), Matrix::identity(3)));
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(Complex a, Complex b) {
  return same_bits(a.real(), b.real()) && same_bits(a.imag(), b.imag());
}

}  // namespace

TEST_CASE("power options validation") {
  PowerOptions bad;
  bad.tolerance = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.max_iterations = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("start vectors are unit length and seed determined") {
  const Vector a = start_vector(5, 42);
  const Vector b = start_vector(5, 42);
  const Vector c = start_vector(5, 43);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(std::abs(norm2(a) - 1.0) <= 4 * kEpsilon);
}

TEST_CASE("power_iteration examples") {
  SUBCASE("dominant axis") {
    const Matrix a = diag({3, 1});
    const EigenPair p = power_iteration(a);
    CHECK(std::abs(p.lambda - Complex{3}) <= 1e-10);
    CHECK(p.residual <= 1e-10 * frobenius_norm(a));
    CHECK(std::abs(p.x[1]) <= 1e-9);
  }
  SUBCASE("identity converges on the first check") {
    PowerOptions opts;
    opts.max_iterations = 1;
    const EigenPair p = power_iteration(Matrix::identity(2), opts);
    CHECK(std::abs(p.lambda - Complex{1}) <= 4 * kEpsilon);
  }
  SUBCASE("modulus tie does not converge") {
    const Matrix swap{{0, 1}, {1, 0}};
    for (std::uint64_t seed : {1u, 2u, 3u, 1234u}) {
      PowerOptions opts;
      opts.seed = seed;
      try {
        (void)power_iteration(swap, opts);
        FAIL("expected NoConvergence");
      } catch (const NoConvergence& e) {
        CHECK(e.iterations() == opts.max_iterations);
        CHECK(e.residual() > 1e-3);
        CHECK_FALSE(e.stage().has_value());
      }
    }
  }
  SUBCASE("tie below the dominant eigenvalue is harmless") {
    // The exchange block has eigenvalues +-1; only the dominant modulus must be unique.
    const Matrix a{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}};
    CHECK(std::abs(power_iteration(a).lambda - Complex{5}) <= 1e-9);
  }
  SUBCASE("zero matrix") {
    const EigenPair p = power_iteration(Matrix(3, 3));
    CHECK(p.lambda == Complex{0});
    CHECK(p.residual == 0.0);
  }
}

TEST_CASE("power iteration residual contract on random instances") {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    auto c = testing::constructed_diagonalizable(rng, n, testing::SpectrumKind::distinct_modulus);
    PowerOptions opts;
    opts.seed = static_cast<std::uint64_t>(t);
    const EigenPair p = power_iteration(c.a, opts);
    CHECK(p.residual <= opts.tolerance * frobenius_norm(c.a));
    double dominant = 0;
    for (double d : c.diag) dominant = std::abs(d) > std::abs(dominant) ? d : dominant;
    CHECK(std::abs(p.lambda - dominant) <= 1e-6);
  }
}

TEST_CASE("spectrum_by_deflation examples") {
  SUBCASE("diagonal") {
    const auto r = spectrum_by_deflation(diag({5, 2, 1}));
    CHECK(spectra_match(r.spectrum, {5, 2, 1}, 1e-10));
    CHECK(r.stages.size() == 3);
    CHECK(r.per_stage_residuals.size() == 3);
    for (double res : r.per_stage_residuals) CHECK(res <= 1e-9);
  }
  SUBCASE("explicit similarity") {
    const Matrix a = similar_to({7, 3, -2});
    const auto r = spectrum_by_deflation(a);
    CHECK(spectra_match(r.spectrum, {7, 3, -2}, 1e-6));
    CHECK(spectra_match(r.spectrum, oracle::eig_oracle(a), 1e-6));
  }
  SUBCASE("modulus tie at stage 0") {
    const Matrix a = similar_to({2, -2, 1});
    try {
      (void)spectrum_by_deflation(a);
      FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
      REQUIRE(e.stage().has_value());
      CHECK(*e.stage() == 0);
    }
  }
  SUBCASE("modulus tie at a later stage") {
    const Matrix a = similar_to({9, 2, -2});
    try {
      (void)spectrum_by_deflation(a);
      FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
      REQUIRE(e.stage().has_value());
      CHECK(*e.stage() == 1);
    }
  }
  SUBCASE("1x1") {
    const auto r = spectrum_by_deflation(Matrix{{Complex{2, 1}}});
    CHECK(r.spectrum[0] == Complex{2, 1});
    CHECK(r.stages.size() == 1);
  }
}

TEST_CASE("spectrum_by_deflation stage sizes shrink by one") {
  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    auto c = testing::constructed_diagonalizable(rng, n, testing::SpectrumKind::distinct_modulus);
    const auto r = spectrum_by_deflation(c.a);
    REQUIRE(r.spectrum.size() == n);
    REQUIRE(r.stages.size() == n);
    REQUIRE(r.per_stage_residuals.size() == n);
    for (std::size_t k = 0; k < n; ++k) CHECK(r.stages[k].dimension == n - k);
  }
}

TEST_CASE("brauer_annihilate_and_continue examples") {
  SUBCASE("diagonal bookkeeping") {
    const Matrix a = diag({5, 2, 1});
    const auto r = brauer_annihilate_and_continue(a);
    REQUIRE(r.spectrum.size() == 3);
    CHECK(std::abs(r.spectrum[0] - Complex{5}) <= 1e-9);
    CHECK(std::abs(r.spectrum[1] - Complex{2}) <= 1e-9);
    CHECK(std::abs(r.spectrum[2] - Complex{1}) <= 1e-9);

    // Working spectra after each stage, reproduced with the same pairs.
    Matrix working = a;
    const std::vector<Spectrum> expected{{0, 2, 1}, {0, 0, 1}};
    for (std::size_t k = 0; k < 2; ++k) {
      PowerOptions opts;
      opts.seed += k;
      const EigenPair p = power_iteration(working, opts);
      working = shift_eigenvalue(working, p, 0).matrix;
      CHECK(spectra_match(oracle::eig_oracle(working), expected[k], 1e-8));
    }
  }
  SUBCASE("explicit similarity, agreeing with the shrinking driver") {
    const Matrix a = similar_to({7, 3, -2});
    const auto r = brauer_annihilate_and_continue(a);
    CHECK(spectra_match(r.spectrum, {7, 3, -2}, 1e-6));
    CHECK(spectra_match(r.spectrum, spectrum_by_deflation(a).spectrum, 1e-6));
  }
  SUBCASE("trailing zero eigenvalue") {
    const auto r = brauer_annihilate_and_continue(diag({3, 0}));
    REQUIRE(r.spectrum.size() == 2);
    CHECK(spectra_match(r.spectrum, {3, 0}, 1e-10));
    REQUIRE(r.stages.size() == 2);
    CHECK(std::abs(r.stages[1].lambda) <= 1e-10);
  }
  SUBCASE("eigenvalue indistinguishable from annihilated zeros") {
    try {
      (void)brauer_annihilate_and_continue(diag({4, 1e-8}));
      FAIL("expected ZeroCollision");
    } catch (const ZeroCollision& e) {
      CHECK(e.stage() == 1);
      CHECK(std::abs(e.value() - Complex{1e-8}) <= 1e-12);
    }
  }
  SUBCASE("modulus tie") {
    try {
      (void)brauer_annihilate_and_continue(similar_to({2, -2, 1}));
      FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
      CHECK(e.stage() == std::optional<std::size_t>(0));
    }
  }
}

TEST_CASE("drivers are deterministic to the bit") {
  const Matrix a = similar_to({7, 3, -2});
  for (auto driver : {&spectrum_by_deflation, &brauer_annihilate_and_continue}) {
    const auto r1 = driver(a, {});
    const auto r2 = driver(a, {});
    REQUIRE(r1.spectrum.size() == r2.spectrum.size());
    for (std::size_t i = 0; i < r1.spectrum.size(); ++i) CHECK(same_bits(r1.spectrum[i], r2.spectrum[i]));
    REQUIRE(r1.per_stage_residuals.size() == r2.per_stage_residuals.size());
    for (std::size_t i = 0; i < r1.per_stage_residuals.size(); ++i) {
      CHECK(same_bits(r1.per_stage_residuals[i], r2.per_stage_residuals[i]));
      CHECK(same_bits(r1.stages[i].block_residual, r2.stages[i].block_residual));
    }
  }
}

TEST_CASE("driver agreement on random distinct-modulus spectra") {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    auto c = testing::constructed_diagonalizable(rng, n, testing::SpectrumKind::distinct_modulus);
    const Spectrum truth(std::vector<Complex>(c.diag.begin(), c.diag.end()));
    const auto shrink = spectrum_by_deflation(c.a);
    const auto annihilate = brauer_annihilate_and_continue(c.a);
    CHECK(spectra_match(shrink.spectrum, truth, 1e-6));
    CHECK(spectra_match(annihilate.spectrum, truth, 1e-6));
    CHECK(spectra_match(oracle::eig_oracle(c.a), truth, 1e-6));
  }
}
