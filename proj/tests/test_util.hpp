#pragma once

#include <random>

#include "qorbit/exact_state.hpp"
#include "qorbit/gates.hpp"

namespace qorbit::test {

// Random Clifford state: a random word over the full generator set applied
// to |0000>.
inline ExactState random_state(std::mt19937& rng, int length = 24,
                               GeneratorSetName name = GeneratorSetName::FULL_C) {
  const GeneratorSet gens = generator_set(name);
  std::uniform_int_distribution<std::size_t> pick(0, gens.gates.size() - 1);
  ExactState s = zero_state();
  for (int i = 0; i < length; ++i) s = apply_gate(s, gens.gates[pick(rng)]);
  return s;
}

inline Circuit random_circuit(std::mt19937& rng, int length,
                              GeneratorSetName name = GeneratorSetName::FULL_C) {
  const GeneratorSet gens = generator_set(name);
  std::uniform_int_distribution<std::size_t> pick(0, gens.gates.size() - 1);
  Circuit c;
  for (int i = 0; i < length; ++i) c.push_back(gens.gates[pick(rng)]);
  return c;
}

}  // namespace qorbit::test
