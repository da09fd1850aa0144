#include "brauer/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace brauer {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": shapes " + shape_string(a) + " and " +
                            shape_string(b) + " differ");
  }
}

void require_same_size(const Vector& a, const Vector& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::string(op) + ": vector lengths " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()) + " differ");
  }
}

// Scaled sum of squares: returns sqrt(sum |v_i|^2) without overflow or
// underflow by factoring out the largest modulus first.
double scaled_norm(std::span<const Complex> values) {
  const double scale = max_modulus(values);
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const Complex& z : values) {
    const double re = z.real() / scale;
    const double im = z.imag() / scale;
    sum += re * re + im * im;
  }
  return scale * std::sqrt(sum);
}

}  // namespace

Vector::Vector(std::size_t dim) : entries_(dim) {}

Vector::Vector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  require_finite(entries_, "vector");
}

Vector::Vector(std::initializer_list<Complex> entries) : entries_(entries) {
  require_finite(entries_, "vector");
}

Vector Vector::basis(std::size_t dim, std::size_t index) {
  Vector e(dim);
  e[index] = 1.0;
  return e;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return z == Complex{}; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("matrix " + shape_string(*this) + " given " +
                            std::to_string(entries_.size()) + " entries");
  }
  require_finite(entries_, "matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_, "matrix");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(diag, "diagonal");
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) throw DimensionMismatch("from_columns: no columns");
  const std::size_t n = columns.front().size();
  Matrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw DimensionMismatch("from_columns: ragged columns");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  Vector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw DimensionMismatch("block out of range for " + shape_string(*this));
  }
  Matrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  }
  return b;
}

std::string shape_string(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_finite(std::span<const Complex> values, const char* what) {
  for (const Complex& z : values) {
    if (!finite(z)) throw NonFiniteValue(std::string(what) + " has a non-finite entry");
  }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: shapes " + shape_string(a) + " and " + shape_string(b) +
                            " are not conformant");
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix conj_transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  }
  return t;
}

Matrix outer(const Vector& x, const Vector& y) {
  if (x.empty() || y.empty()) throw DimensionMismatch("outer: empty vector");
  Matrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  }
  require_finite(m.entries(), "outer product");
  return m;
}

Vector matvec(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) {
    throw DimensionMismatch("matvec: matrix " + shape_string(a) + " and vector of length " +
                            std::to_string(v.size()));
  }
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "subtract");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  }
  return c;
}

Matrix operator*(Complex s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  }
  return c;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a, b, "add");
  Vector c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a, b, "subtract");
  Vector c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

Vector operator*(Complex s, const Vector& v) {
  Vector c = v;
  for (std::size_t i = 0; i < v.size(); ++i) c[i] *= s;
  return c;
}

Complex dot(const Vector& a, const Vector& b) {
  require_same_size(a, b, "dot");
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Complex trace(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("trace: matrix " + shape_string(a) + " not square");
  Complex s{};
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

double norm2(const Vector& v) { return scaled_norm(v.entries()); }

double frobenius_norm(const Matrix& a) { return scaled_norm(a.entries()); }

double inf_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

double max_modulus(std::span<const Complex> values) {
  double m = 0.0;
  for (const Complex& z : values) m = std::max(m, std::abs(z));
  return m;
}

Matrix LUFactorization::lower() const {
  const std::size_t n = size();
  Matrix l = Matrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) l(i, j) = packed(i, j);
  }
  return l;
}

Matrix LUFactorization::upper() const {
  const std::size_t n = size();
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) u(i, j) = packed(i, j);
  }
  return u;
}

Matrix LUFactorization::permute_rows(const Matrix& a) const {
  if (a.rows() != size()) throw DimensionMismatch("permute_rows: row count mismatch");
  Matrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = a(pivot[i], j);
  }
  return p;
}

Complex LUFactorization::determinant() const {
  Complex det = static_cast<double>(sign);
  for (std::size_t i = 0; i < size(); ++i) det *= packed(i, i);
  return det;
}

LUFactorization lu_factor(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("lu_factor: matrix " + shape_string(a) + " not square");
  const std::size_t n = a.rows();
  const double threshold = static_cast<double>(n) * kEpsilon * inf_norm(a);

  LUFactorization f{a, std::vector<std::size_t>(n), 1};
  Matrix& lu = f.packed;
  for (std::size_t i = 0; i < n; ++i) f.pivot[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(lu(i, k));
      if (m > best) {
        best = m;
        p = i;
      }
    }
    if (best == 0.0 || best < threshold) throw SingularMatrix(k, best, threshold);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(f.pivot[k], f.pivot[p]);
      f.sign = -f.sign;
    }
    const Complex pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = lu(i, k) / pivot;
      lu(i, k) = factor;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
    }
  }
  return f;
}

Vector lu_solve(const LUFactorization& f, const Vector& b) {
  const std::size_t n = f.size();
  if (b.size() != n) {
    throw DimensionMismatch("lu_solve: factorization of size " + std::to_string(n) +
                            " and right-hand side of length " + std::to_string(b.size()));
  }
  const Matrix& lu = f.packed;
  Vector z(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = b[f.pivot[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * z[j];
    z[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    Complex s = z[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * z[j];
    z[i] = s / lu(i, i);
  }
  return z;
}

Matrix lu_solve(const LUFactorization& f, const Matrix& b) {
  if (b.rows() != f.size()) {
    throw DimensionMismatch("lu_solve: factorization of size " + std::to_string(f.size()) +
                            " and right-hand side " + shape_string(b));
  }
  Matrix x(b.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    const Vector col = lu_solve(f, b.column(j));
    for (std::size_t i = 0; i < b.rows(); ++i) x(i, j) = col[i];
  }
  return x;
}

}  // namespace brauer
