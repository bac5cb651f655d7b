#pragma once

#include <cstdint>

namespace qorbit {

// Gaussian integer a + bi. Amplitude numerators stay tiny (|re|,|im| <= 16
// for every enumerated state), so plain machine ints suffice.
struct GaussianInt {
  std::int32_t re = 0;
  std::int32_t im = 0;

  friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr GaussianInt operator-(GaussianInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(GaussianInt a, GaussianInt b) {
    return a.re == b.re && a.im == b.im;
  }

  // Multiplication by the imaginary unit.
  constexpr GaussianInt times_i() const { return {-im, re}; }

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr std::int64_t norm2() const {
    return std::int64_t(re) * re + std::int64_t(im) * im;
  }
};

}  // namespace qorbit
