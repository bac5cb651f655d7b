#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "qorbit/gaussian.hpp"

namespace qorbit {

// A 4-qubit state vector with exact amplitudes amps[b] / sqrt(2)^k.
//
// Basis convention: amps[b] is the coefficient of the computational ket whose
// bit string is the binary expansion of b, and qubit q (q = 1..4) addresses
// bit 2^(q-1) of b. So in the usual ket notation |b4 b3 b2 b1>, qubit 1 is
// the rightmost (least significant) position and b is just the string read as
// a binary number.
//
// Canonical form: sum_b |amps[b]|^2 == 2^k, and either k <= 1 or some
// component is odd (the factor-of-2 reduction does not apply).
struct ExactState {
  std::array<GaussianInt, 16> amps{};
  int k = 0;

  friend bool operator==(const ExactState& a, const ExactState& b) = default;
};

inline constexpr std::size_t kEncodedSize = 33;
using StateKey = std::array<std::uint8_t, kEncodedSize>;

// Reduces a raw state (arbitrary k) to its unique canonical representative.
// Throws NormalizationViolation if sum |amps|^2 != 2^k.
ExactState canonicalize(const ExactState& raw);

bool is_canonical(const ExactState& s);

// On-disk / hash-key record: 1 byte k, then 16 pairs of signed 8-bit (re, im)
// in basis order b = 0..15. Throws InternalError if a component overflows.
StateKey encode(const ExactState& s);

// Inverse of encode; validates canonical form. Throws DecodeError.
ExactState decode(std::span<const std::uint8_t> bytes);

// Total order on states: k first, then amplitude pairs compared at b = 15
// down to b = 0 (so the 16 basis states sort in basis order). This is the
// canonical ordering used everywhere a state set is persisted or reported.
bool state_less(const ExactState& a, const ExactState& b);
bool key_less(const StateKey& a, const StateKey& b);

// |0000>.
ExactState zero_state();

// Basis ket with index b.
ExactState basis_state(int b);

bool is_real(const ExactState& s);

// Human-readable ket sum, e.g. "(1/sqrt2)(|0000> + |0001>)".
std::string to_ket_string(const ExactState& s);

// Lowercase hex of the byte encoding.
std::string to_hex(const StateKey& key);

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const {
    // FNV-1a.
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t byte : key) {
      h ^= byte;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace qorbit
