#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qorbit/closure.hpp"
#include "qorbit/exact_state.hpp"

namespace qorbit {

// Set of basis indices with nonzero amplitude, as a 16-bit mask.
struct Support {
  std::uint16_t mask = 0;

  int size() const;
  std::vector<int> indices() const;
  friend bool operator==(const Support&, const Support&) = default;
};

// Nonzero-amplitude indices. Also asserts the uniform-population property:
// every |amps[b]|^2 on the support equals 2^k / |support| (throws NonUniform
// otherwise; that would contradict the enumeration).
Support support(const ExactState& s);

// True if the support is an affine subspace of the 4-bit hypercube (closed
// under x ^ y ^ z). Every achieved support turns out to be one; this is an
// observation the census verifies, not an assumption.
bool is_affine_support(Support sup);

struct PopulationCensus {
  // support size (1,2,4,8,16) -> number of distinct supports of that size
  std::map<int, std::int64_t> count_by_size;
  std::vector<Support> supports;  // deduplicated, ascending by mask
  std::int64_t total() const;
};

PopulationCensus population_census(const StateSet& set);

}  // namespace qorbit
