#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qorbit/exact_state.hpp"

namespace qorbit {

enum class GateKind { H, P, Z, X, CNOT, CZ };

// Symbolic gate token. Single-qubit kinds use q1 only; CNOT is the ordered
// pair (control, target); CZ is stored with q1 < q2 (unordered pair).
struct Gate {
  GateKind kind;
  int q1 = 0;
  int q2 = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

Gate make_h(int q);
Gate make_p(int q);
Gate make_z(int q);
Gate make_x(int q);
Gate make_cnot(int control, int target);
Gate make_cz(int a, int b);

using Circuit = std::vector<Gate>;

// Number of entangling entries (CNOT or CZ).
int cnot_count(const Circuit& c);

// Gate-wise inverse in reverse order (P^-1 = PPP; the rest are involutions).
Circuit inverse(const Circuit& c);

// Named generator sets from the enumeration procedure.
enum class GeneratorSetName { LOCAL_C, LOCAL_R, FULL_C, FULL_R };

struct GeneratorSet {
  GeneratorSetName name;
  std::vector<Gate> gates;
};

// Canonical gate order: H(1..4), then P(1..4) or Z(1..4), then the 12
// ordered CNOT pairs (1,2),(1,3),(1,4),(2,1),...
GeneratorSet generator_set(GeneratorSetName name);
std::string generator_set_name(GeneratorSetName name);
GeneratorSetName generator_set_from_name(std::string_view name);

// The six CZ gates {i,j} in canonical pair order 12,13,14,23,24,34.
std::vector<Gate> cz_gates();
// The 12 ordered CNOT gates.
std::vector<Gate> cnot_gates();

// Exact action on a canonical state; returns a canonical state.
ExactState apply_gate(const ExactState& s, const Gate& g);
ExactState apply_circuit(const ExactState& s, const Circuit& c);

// Textual form: H1, P3, Z2, X4, CNOT(1,2), CZ(1,2).
std::string to_string(const Gate& g);
// Comma-separated gate list.
std::string to_string(const Circuit& c);
Gate parse_gate(std::string_view text);
Circuit parse_circuit(std::string_view text);

}  // namespace qorbit
