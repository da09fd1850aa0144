#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "brauer/linalg.hpp"

namespace brauer {

// Eigenvalues listed with multiplicity. Order carries no meaning; compare
// two spectra with oracle::match_multisets, never element by element.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<Complex> values) : values_(std::move(values)) {}
  Spectrum(std::initializer_list<Complex> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Complex> values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  void push_back(Complex z) { values_.push_back(z); }

 private:
  std::vector<Complex> values_;
};

}  // namespace brauer
