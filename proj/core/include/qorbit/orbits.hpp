#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qorbit/closure.hpp"
#include "qorbit/exact_state.hpp"
#include "qorbit/gates.hpp"

namespace qorbit {

// Exact non-negative rational, kept reduced. Entropies are p/3 in bits.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational reduced(long long num, long long den);
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
};

// One side of a qubit cut, as a mask with bit q-1 set for qubit q.
struct Bipartition {
  std::uint8_t side_a_mask;
};

// The three 2|2 cuts in fixed order 12|34, 13|24, 14|23.
inline constexpr std::array<std::uint8_t, 3> kCutMasks = {0b0011, 0b0101, 0b1001};
inline constexpr const char* kCutNames[3] = {"12/34", "13/24", "14/23"};

// Schmidt rank across a cut: exact rank of the amplitude matrix reshaped to
// 2^|A| x 2^(4-|A|). Also asserts the flat-spectrum property (MM+)^2
// proportional to MM+, true for every Clifford state; throws
// FlatSpectrumViolation otherwise.
int schmidt_rank(const ExactState& s, Bipartition cut);

// Per-qubit and per-cut entropies in bits (log2 of Schmidt rank) plus the
// support size. The entropies are local-Clifford invariants; support size is
// not and is excluded from orbit fingerprints.
struct Fingerprint {
  std::array<int, 4> single{};  // qubit 1..4
  std::array<int, 3> cut{};     // cuts in kCutMasks order
  int support_size = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const ExactState& s);

// Mean 2|2-cut entropy in bits: (log2 r12 + log2 r13 + log2 r14) / 3.
Rational entanglement_entropy(const ExactState& s);

struct OrbitInfo {
  std::string label;
  std::uint32_t size = 0;
  Rational entropy;
  Fingerprint fp;             // of the representative; support_size zeroed
  std::uint32_t rep_idx = 0;  // minimal-encoding member
};

struct OrbitPartition {
  std::vector<std::int32_t> orbit_of;  // state index -> orbit id
  std::vector<OrbitInfo> orbits;
};

// Connected components of S under the local generators. Orbit ids are
// assigned by canonical order of each orbit's minimal state encoding.
// Throws NotClosed if a generator image leaves S.
OrbitPartition partition(const StateSet& set, const GeneratorSet& locals);

// Assigns the 18 complex-case labels (S0, Tab, Uab/cd, Va, W, Xab/cd) from
// the entropy fingerprints. Throws AmbiguousLabel if the fingerprints do not
// separate the orbits.
void label_complex_orbits(const StateSet& set, OrbitPartition& p);

// Assigns the 29 real-case labels. Family and subscript come from the
// fingerprint, hatted vs unhatted from the orbit size, and the hatted-X
// subscript from the unique CZ pair that maps the orbit into the size-64
// orbit.
void label_real_orbits(const StateSet& set, OrbitPartition& p);

// One JSON object per orbit (label, size, entropy, fingerprint,
// representative hex encoding), one per line, in orbit-id order.
std::string orbit_report_jsonl(const StateSet& set, const OrbitPartition& p);

}  // namespace qorbit
