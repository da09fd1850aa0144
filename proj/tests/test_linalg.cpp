#include <doctest.h>

#include <cmath>

#include "brauer/linalg.hpp"
#include "support/generators.hpp"

using namespace brauer;
using brauer::testing::Rng;

namespace {

const Complex I{0.0, 1.0};

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return frobenius_norm(a - b);
}

}  // namespace

TEST_CASE("matmul examples") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(matmul(Matrix::identity(2), m) == m);

  const Matrix swap{{0, 1}, {1, 0}};
  CHECK(matmul(swap, swap) == Matrix::identity(2));

  const Matrix left{{1, I}, {0, 1}};
  const Matrix right{{1, 0}, {I, 1}};
  const Matrix expected{{0, I}, {I, 1}};
  CHECK(matmul(left, right) == expected);
}

TEST_CASE("matmul rejects nonconformant shapes and names both") {
  const Matrix a(2, 3), b(2, 3);
  try {
    (void)matmul(a, b);
    FAIL("expected DimensionMismatch");
  } catch (const DimensionMismatch& e) {
    const std::string msg = e.what();
    CHECK(msg.find("2x3") != std::string::npos);
  }
}

TEST_CASE("conj_transpose") {
  CHECK(conj_transpose(Matrix{{1, 2}, {3, 4}}) == Matrix{{1, 3}, {2, 4}});
  CHECK(conj_transpose(Matrix{{I}}) == Matrix{{-I}});

  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = testing::random_matrix(rng, 1 + t % 4, 1 + t % 3);
    CHECK(conj_transpose(conj_transpose(a)) == a);
  }
}

TEST_CASE("outer product examples") {
  CHECK(outer(Vector{1, 0}, Vector{3, 0}) == Matrix{{3, 0}, {0, 0}});
  CHECK(outer(Vector{1, 1}, Vector{0, 0}) == Matrix(2, 2));
  CHECK(outer(Vector{1, I}, Vector{I, 1}) == Matrix{{-I, 1}, {1, I}});
}

TEST_CASE("outer product has rank at most one") {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 5;
    const Vector x = testing::random_vector(rng, n);
    const Vector y = testing::random_vector(rng, n);
    const Matrix m = outer(x, y);
    const double bound = 4 * kEpsilon * norm2(x) * norm2(y);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t k = i + 1; k < n; ++k) {
          for (std::size_t l = j + 1; l < n; ++l) {
            const Complex minor = m(i, j) * m(k, l) - m(i, l) * m(k, j);
            CHECK(std::abs(minor) <= bound * norm2(x) * norm2(y));
          }
        }
      }
    }
  }
}

TEST_CASE("matvec examples") {
  CHECK(matvec(Matrix::identity(3), Vector{1, 2, 3}) == Vector{1, 2, 3});
  const std::vector<Complex> d{2, 3};
  CHECK(matvec(Matrix::diagonal(d), Vector{1, 1}) == Vector{2, 3});
  CHECK(matvec(Matrix{{0, 1}, {1, 0}}, Vector{5, 7}) == Vector{7, 5});
  CHECK_THROWS_AS((void)matvec(Matrix(2, 2), Vector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("frobenius norm examples") {
  CHECK(frobenius_norm(Matrix(3, 2)) == 0.0);
  CHECK(frobenius_norm(Matrix::identity(2)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(frobenius_norm(Matrix{{3, 4}}) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("norms survive extreme scales") {
  const Vector tiny{1e-200, Complex{0, 1e-200}};
  CHECK(norm2(tiny) == doctest::Approx(std::sqrt(2.0) * 1e-200).epsilon(1e-14));
  const Vector huge{3e200, 4e200};
  CHECK(norm2(huge) == doctest::Approx(5e200).epsilon(1e-14));
}

TEST_CASE("constructors reject non-finite entries and bad shapes") {
  CHECK_THROWS_AS(Matrix(1, 1, {Complex{NAN, 0}}), NonFiniteValue);
  CHECK_THROWS_AS(Vector({Complex{0, INFINITY}}), NonFiniteValue);
  CHECK_THROWS_AS(Matrix(2, 2, {1, 2, 3}), DimensionMismatch);
  CHECK_THROWS_AS(Matrix(0, 2), DimensionMismatch);
}

TEST_CASE("lu_factor examples") {
  SUBCASE("identity") {
    const auto f = lu_factor(Matrix::identity(2));
    CHECK(f.lower() == Matrix::identity(2));
    CHECK(f.upper() == Matrix::identity(2));
    CHECK(f.pivot == std::vector<std::size_t>{0, 1});
    CHECK(f.sign == 1);
  }
  SUBCASE("exchange") {
    const auto f = lu_factor(Matrix{{0, 1}, {1, 0}});
    CHECK(f.pivot == std::vector<std::size_t>{1, 0});
    CHECK(f.upper() == Matrix::identity(2));
    CHECK(f.lower() == Matrix::identity(2));
    CHECK(f.sign == -1);
  }
  SUBCASE("rank deficient") {
    try {
      (void)lu_factor(Matrix{{1, 1}, {1, 1}});
      FAIL("expected SingularMatrix");
    } catch (const SingularMatrix& e) {
      CHECK(e.pivot_index() == 1);
    }
  }
  SUBCASE("zero matrix") { CHECK_THROWS_AS((void)lu_factor(Matrix(3, 3)), SingularMatrix); }
  SUBCASE("not square") { CHECK_THROWS_AS((void)lu_factor(Matrix(2, 3)), DimensionMismatch); }
}

TEST_CASE("lu_solve examples") {
  CHECK(lu_solve(lu_factor(Matrix::identity(2)), Vector{4, 5}) == Vector{4, 5});
  const std::vector<Complex> d{2, 4};
  CHECK(lu_solve(lu_factor(Matrix::diagonal(d)), Vector{2, 4}) == Vector{1, 1});
  CHECK(lu_solve(lu_factor(Matrix{{0, 1}, {1, 0}}), Vector{9, 3}) == Vector{3, 9});
  CHECK_THROWS_AS((void)lu_solve(lu_factor(Matrix::identity(2)), Vector{1, 2, 3}),
                  DimensionMismatch);
}

TEST_CASE("lu reconstruction and solve residual on random matrices") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 8);
    const Matrix a = testing::random_matrix(rng, n, n);
    const auto f = lu_factor(a);
    const double na = frobenius_norm(a);
    const double nd = static_cast<double>(n);

    std::vector<std::size_t> sorted = f.pivot;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) REQUIRE(sorted[i] == i);

    CHECK(max_abs_diff(f.permute_rows(a), matmul(f.lower(), f.upper())) <= 8 * nd * kEpsilon * na);

    const Vector b = testing::random_vector(rng, n);
    const Vector z = lu_solve(f, b);
    CHECK(norm2(matvec(a, z) - b) <= 8 * nd * kEpsilon * na * norm2(z));
  }
}

TEST_CASE("lu determinant matches exact integer determinant") {
  Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    const Matrix v = testing::random_integer_matrix(rng, n, -3, 3);
    const double exact = testing::integer_determinant(v);
    if (exact == 0.0) continue;
    CHECK(std::abs(lu_factor(v).determinant() - exact) <= 1e-10 * (1 + std::abs(exact)));
  }
}

TEST_CASE("matmul is associative to rounding") {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
    const Matrix a = testing::random_matrix(rng, n, n);
    const Matrix b = testing::random_matrix(rng, n, n);
    const Matrix c = testing::random_matrix(rng, n, n);
    const double bound = 16 * static_cast<double>(n) * kEpsilon * frobenius_norm(a) *
                         frobenius_norm(b) * frobenius_norm(c);
    CHECK(max_abs_diff(matmul(matmul(a, b), c), matmul(a, matmul(b, c))) <= bound);
  }
}
