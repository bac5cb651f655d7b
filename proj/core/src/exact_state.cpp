#include "qorbit/exact_state.hpp"

#include <cstdlib>
#include <sstream>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

std::int64_t norm2_sum(const ExactState& s) {
  std::int64_t sum = 0;
  for (const auto& z : s.amps) sum += z.norm2();
  return sum;
}

bool any_odd(const ExactState& s) {
  for (const auto& z : s.amps)
    if ((z.re & 1) || (z.im & 1)) return true;
  return false;
}

}  // namespace

ExactState canonicalize(const ExactState& raw) {
  if (raw.k < 0) throw NormalizationViolation("negative denominator exponent");
  std::int64_t sum = norm2_sum(raw);
  if (raw.k >= 63 || sum != (std::int64_t(1) << raw.k)) {
    throw NormalizationViolation("squared norm " + std::to_string(sum) +
                                 " != 2^" + std::to_string(raw.k));
  }
  ExactState s = raw;
  while (s.k >= 2 && !any_odd(s)) {
    for (auto& z : s.amps) {
      z.re /= 2;
      z.im /= 2;
    }
    s.k -= 2;
  }
  return s;
}

bool is_canonical(const ExactState& s) {
  if (s.k < 0 || s.k >= 63) return false;
  if (norm2_sum(s) != (std::int64_t(1) << s.k)) return false;
  return s.k <= 1 || any_odd(s);
}

StateKey encode(const ExactState& s) {
  if (s.k < 0 || s.k > 255) throw InternalError("exponent out of byte range");
  StateKey key{};
  key[0] = static_cast<std::uint8_t>(s.k);
  for (int b = 0; b < 16; ++b) {
    const GaussianInt z = s.amps[b];
    if (z.re < -128 || z.re > 127 || z.im < -128 || z.im > 127)
      throw InternalError("amplitude component out of int8 range");
    key[1 + 2 * b] = static_cast<std::uint8_t>(static_cast<std::int8_t>(z.re));
    key[2 + 2 * b] = static_cast<std::uint8_t>(static_cast<std::int8_t>(z.im));
  }
  return key;
}

ExactState decode(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kEncodedSize)
    throw DecodeError("state record must be 33 bytes, got " +
                      std::to_string(bytes.size()));
  ExactState s;
  s.k = bytes[0];
  for (int b = 0; b < 16; ++b) {
    s.amps[b].re = static_cast<std::int8_t>(bytes[1 + 2 * b]);
    s.amps[b].im = static_cast<std::int8_t>(bytes[2 + 2 * b]);
  }
  if (!is_canonical(s)) throw DecodeError("record is not a canonical state");
  return s;
}

bool state_less(const ExactState& a, const ExactState& b) {
  if (a.k != b.k) return a.k < b.k;
  for (int i = 15; i >= 0; --i) {
    const GaussianInt x = a.amps[i];
    const GaussianInt y = b.amps[i];
    if (x.re != y.re)
      return static_cast<std::uint8_t>(x.re) < static_cast<std::uint8_t>(y.re);
    if (x.im != y.im)
      return static_cast<std::uint8_t>(x.im) < static_cast<std::uint8_t>(y.im);
  }
  return false;
}

bool key_less(const StateKey& a, const StateKey& b) {
  if (a[0] != b[0]) return a[0] < b[0];
  for (int i = 15; i >= 0; --i) {
    if (a[1 + 2 * i] != b[1 + 2 * i]) return a[1 + 2 * i] < b[1 + 2 * i];
    if (a[2 + 2 * i] != b[2 + 2 * i]) return a[2 + 2 * i] < b[2 + 2 * i];
  }
  return false;
}

ExactState zero_state() { return basis_state(0); }

ExactState basis_state(int b) {
  ExactState s;
  s.amps[b] = {1, 0};
  return s;
}

bool is_real(const ExactState& s) {
  for (const auto& z : s.amps)
    if (z.im != 0) return false;
  return true;
}

std::string to_ket_string(const ExactState& s) {
  std::ostringstream out;
  switch (s.k) {
    case 0: break;
    case 1: out << "(1/sqrt2)"; break;
    case 2: out << "(1/2)"; break;
    case 3: out << "(1/(2sqrt2))"; break;
    case 4: out << "(1/4)"; break;
    default: out << "(1/sqrt2^" << s.k << ")"; break;
  }
  out << "(";
  bool first = true;
  for (int b = 0; b < 16; ++b) {
    const GaussianInt z = s.amps[b];
    if (z.is_zero()) continue;
    std::string coeff;
    if (z == GaussianInt{1, 0}) coeff = first ? "" : "+ ";
    else if (z == GaussianInt{-1, 0}) coeff = "- ";
    else if (z == GaussianInt{0, 1}) coeff = first ? "i" : "+ i";
    else if (z == GaussianInt{0, -1}) coeff = "- i";
    else {
      std::ostringstream c;
      if (!first) c << "+ ";
      c << "(" << z.re << (z.im >= 0 ? "+" : "") << z.im << "i)";
      coeff = c.str();
    }
    if (!first) out << " ";
    out << coeff << "|";
    for (int q = 4; q >= 1; --q) out << ((b >> (q - 1)) & 1);
    out << ">";
    first = false;
  }
  out << ")";
  return out.str();
}

std::string to_hex(const StateKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * key.size());
  for (std::uint8_t byte : key) {
    hex.push_back(digits[byte >> 4]);
    hex.push_back(digits[byte & 0xf]);
  }
  return hex;
}

}  // namespace qorbit
