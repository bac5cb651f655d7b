#include "qorbit/populations.hpp"

#include <bit>
#include <bitset>

#include "qorbit/errors.hpp"

namespace qorbit {

int Support::size() const { return std::popcount(mask); }

std::vector<int> Support::indices() const {
  std::vector<int> idx;
  for (int b = 0; b < 16; ++b)
    if ((mask >> b) & 1) idx.push_back(b);
  return idx;
}

Support support(const ExactState& s) {
  Support sup;
  std::int64_t common = -1;
  for (int b = 0; b < 16; ++b) {
    const std::int64_t n2 = s.amps[b].norm2();
    if (n2 == 0) continue;
    sup.mask |= std::uint16_t(1) << b;
    if (common < 0) common = n2;
    if (n2 != common) throw NonUniform("population is not uniform");
  }
  if (sup.mask == 0) throw NonUniform("zero state has no support");
  if (common * sup.size() != (std::int64_t(1) << s.k))
    throw NonUniform("support probabilities do not sum to one");
  return sup;
}

bool is_affine_support(Support sup) {
  const auto idx = sup.indices();
  if (idx.empty() || (idx.size() & (idx.size() - 1)) != 0) return false;
  for (int x : idx)
    for (int y : idx)
      for (int z : idx)
        if (!((sup.mask >> (x ^ y ^ z)) & 1)) return false;
  return true;
}

PopulationCensus population_census(const StateSet& set) {
  std::bitset<65536> seen;
  for (std::uint32_t i = 0; i < set.size(); ++i)
    seen.set(support(set.state(i)).mask);

  PopulationCensus census;
  for (std::uint32_t mask = 1; mask < 65536; ++mask)
    if (seen.test(mask)) {
      census.supports.push_back({static_cast<std::uint16_t>(mask)});
      ++census.count_by_size[std::popcount(mask)];
    }
  return census;
}

std::int64_t PopulationCensus::total() const {
  std::int64_t sum = 0;
  for (const auto& [size, count] : count_by_size) sum += count;
  return sum;
}

}  // namespace qorbit
