#include "brauer/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace brauer::io {
namespace {

bool parse_float(std::string_view text, double& value, std::size_t& consumed) {
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || !std::isfinite(value)) return false;
  consumed = static_cast<std::size_t>(ptr - first);
  return true;
}

std::string shortest(double d) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, ptr);
}

bool is_positive_zero(double d) { return d == 0.0 && !std::signbit(d); }

std::vector<std::string_view> tokens_of(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;

    const std::size_t lead = line.find_first_not_of(" \t\r\f\v");
    if (lead == std::string_view::npos || line[lead] == '#') continue;
    std::size_t i = lead;
    while (i < line.size()) {
      const std::size_t start = line.find_first_not_of(" \t\r\f\v", i);
      if (start == std::string_view::npos) break;
      std::size_t stop = line.find_first_of(" \t\r\f\v", start);
      if (stop == std::string_view::npos) stop = line.size();
      tokens.push_back(line.substr(start, stop - start));
      i = stop;
    }
  }
  return tokens;
}

std::size_t parse_dimension(std::string_view token, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<Complex> parse_entries(const std::vector<std::string_view>& tokens,
                                   std::size_t offset, std::size_t expected) {
  const std::size_t found = tokens.size() - offset;
  if (found != expected) {
    throw ParseError("expected " + std::to_string(expected) + " entries, found " +
                     std::to_string(found));
  }
  std::vector<Complex> entries;
  entries.reserve(expected);
  for (std::size_t i = offset; i < tokens.size(); ++i) entries.push_back(parse_complex(tokens[i]));
  return entries;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(path.string() + ": cannot open file for writing");
  out << text;
  if (!out) throw Error(path.string() + ": write failed");
}

template <typename F>
auto with_file_context(const std::filesystem::path& path, F&& parse) {
  try {
    return parse(slurp(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string() + ":", 0) == 0) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

}  // namespace

Complex parse_complex(std::string_view literal) {
  auto fail = [&]() -> Complex {
    throw ParseError("malformed complex literal '" + std::string(literal) + "'");
  };
  if (literal.empty() || literal.front() == '+') return fail();

  double head = 0.0;
  std::size_t used = 0;
  if (!parse_float(literal, head, used)) return fail();
  std::string_view rest = literal.substr(used);

  if (rest.empty()) return {head, 0.0};
  if (rest == "i") return {0.0, head};
  if (rest.front() != '+' && rest.front() != '-') return fail();

  const bool negative = rest.front() == '-';
  rest.remove_prefix(1);
  if (rest.empty() || rest.front() == '+' || rest.front() == '-') return fail();
  double tail = 0.0;
  if (!parse_float(rest, tail, used) || rest.substr(used) != "i") return fail();
  return {head, negative ? -tail : tail};
}

std::string format_complex(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  if (is_positive_zero(im)) return shortest(re);
  if (is_positive_zero(re)) return shortest(im) + "i";
  return shortest(re) + (std::signbit(im) ? "-" : "+") + shortest(std::abs(im)) + "i";
}

std::string format_rounded(Complex z, int significant_digits) {
  const double snap = 0.5 * std::pow(10.0, 1 - significant_digits) * std::abs(z);
  auto round_part = [&](double c) {
    if (std::abs(c) <= snap) return 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, c);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
  };
  return format_complex({round_part(z.real()), round_part(z.imag())});
}

Matrix parse_matrix(std::string_view text) {
  const auto tokens = tokens_of(text);
  if (tokens.size() < 3 || tokens[0] != "complex-matrix") {
    throw ParseError("missing 'complex-matrix <rows> <cols>' header");
  }
  const std::size_t rows = parse_dimension(tokens[1], "row count");
  const std::size_t cols = parse_dimension(tokens[2], "column count");
  return Matrix(rows, cols, parse_entries(tokens, 3, rows * cols));
}

Vector parse_vector(std::string_view text) {
  const auto tokens = tokens_of(text);
  if (tokens.size() < 2 || tokens[0] != "complex-vector") {
    throw ParseError("missing 'complex-vector <dim>' header");
  }
  const std::size_t dim = parse_dimension(tokens[1], "dimension");
  return Vector(parse_entries(tokens, 2, dim));
}

std::string format_matrix(const Matrix& m) {
  std::string out = "complex-matrix " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_complex(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_vector(const Vector& v) {
  std::string out = "complex-vector " + std::to_string(v.size()) + "\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_complex(v[i]);
  }
  out += '\n';
  return out;
}

Matrix read_matrix(const std::filesystem::path& path) {
  return with_file_context(path, [](const std::string& text) { return parse_matrix(text); });
}

Vector read_vector(const std::filesystem::path& path) {
  return with_file_context(path, [](const std::string& text) { return parse_vector(text); });
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
  spill(path, format_matrix(m));
}

void write_vector(const std::filesystem::path& path, const Vector& v) {
  spill(path, format_vector(v));
}

}  // namespace brauer::io
