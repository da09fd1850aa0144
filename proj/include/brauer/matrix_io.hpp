#pragma once

// Plain-text matrix and vector files.
//
//   complex-matrix <rows> <cols>       complex-vector <dim>
//   <rows*cols literals, row-major>    <dim literals>
//
// Literals are <float>, <float>+<float>i, <float>-<float>i or <float>i with
// no embedded spaces. Lines whose first non-blank character is '#' are
// comments. Writers emit shortest round-trip decimals so that reading back a
// written file reproduces every entry bit for bit.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "brauer/errors.hpp"
#include "brauer/linalg.hpp"

namespace brauer::io {

class ParseError : public Error {
 public:
  using Error::Error;
};

Complex parse_complex(std::string_view literal);
// Canonical, shortest round-trip form.
std::string format_complex(Complex z);
// Rounded to significant_digits, components with negligible magnitude
// relative to |z| snapped to zero. For human-facing spectrum listings.
std::string format_rounded(Complex z, int significant_digits);

Matrix parse_matrix(std::string_view text);
Vector parse_vector(std::string_view text);
std::string format_matrix(const Matrix& m);
std::string format_vector(const Vector& v);

// File wrappers; ParseError messages name the file.
Matrix read_matrix(const std::filesystem::path& path);
Vector read_vector(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& m);
void write_vector(const std::filesystem::path& path, const Vector& v);

}  // namespace brauer::io
