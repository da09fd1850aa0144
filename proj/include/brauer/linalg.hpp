#pragma once

// Dense complex linear algebra kernel: matrices, vectors, products and a
// partial-pivoting LU. No external numeric library is used so that the
// spectral oracle built on top of it stays independent of anything else.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

using Complex = std::complex<double>;

inline constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim);
  explicit Vector(std::vector<Complex> entries);
  Vector(std::initializer_list<Complex> entries);

  static Vector basis(std::size_t dim, std::size_t index);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Complex> entries_;
};

// Row-major rows x cols array of complex entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Complex> diag);
  static Matrix from_columns(std::span<const Vector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;

  // Copy of the block [row0, row0 + nrows) x [col0, col0 + ncols).
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// "rows x cols", used in error messages.
std::string shape_string(const Matrix& a);

// Throws NonFiniteValue if any entry has a NaN or infinite component.
void require_finite(std::span<const Complex> values, const char* what);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix conj_transpose(const Matrix& a);
Matrix outer(const Vector& x, const Vector& y);
Vector matvec(const Matrix& a, const Vector& v);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, const Matrix& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(Complex s, const Vector& v);

// sum_j conj(a_j) * b_j
Complex dot(const Vector& a, const Vector& b);
Complex trace(const Matrix& a);

// Overflow/underflow-safe 2-norm.
double norm2(const Vector& v);
double frobenius_norm(const Matrix& a);
// Maximum absolute row sum.
double inf_norm(const Matrix& a);
double max_modulus(std::span<const Complex> values);

struct LUFactorization {
  // Unit-lower L below the diagonal, U on and above it.
  Matrix packed;
  // Row pivot[i] of the original matrix sits in row i of P*A.
  std::vector<std::size_t> pivot;
  int sign = 1;

  std::size_t size() const noexcept { return packed.rows(); }
  Matrix lower() const;
  Matrix upper() const;
  // P * a for the permutation recorded in this factorization.
  Matrix permute_rows(const Matrix& a) const;
  Complex determinant() const;
};

// Partial pivoting. A pivot of modulus below n * eps * ||a||_inf (or exactly
// zero) raises SingularMatrix with the failing column index.
LUFactorization lu_factor(const Matrix& a);
Vector lu_solve(const LUFactorization& f, const Vector& b);
// Solves for every column of b.
Matrix lu_solve(const LUFactorization& f, const Matrix& b);

}  // namespace brauer
