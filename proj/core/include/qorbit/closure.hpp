#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qorbit/exact_state.hpp"
#include "qorbit/gates.hpp"

namespace qorbit {

// Deduplicated set of canonical states produced by breadth-first closure
// under a generator set. States are stored in discovery order; the canonical
// (encoding) order used for persistence and reports is kept alongside. Each
// non-seed state records one (parent, gate) edge of the BFS tree, giving a
// shortest word in the generator alphabet back to a seed.
class StateSet {
 public:
  std::size_t size() const { return states_.size(); }
  const ExactState& state(std::uint32_t idx) const { return states_[idx]; }
  const StateKey& key(std::uint32_t idx) const { return keys_[idx]; }

  std::optional<std::uint32_t> find(const ExactState& s) const;
  std::optional<std::uint32_t> find_key(const StateKey& key) const;

  // Indices sorted by the canonical state order.
  const std::vector<std::uint32_t>& canonical_order() const { return canonical_order_; }

  // Shortest generator word from this state's seed to it (empty for seeds).
  Circuit word_to(std::uint32_t idx) const;
  Circuit word_to(const ExactState& target) const;

  const GeneratorSet& generators() const { return generators_; }
  const std::vector<std::uint32_t>& seeds() const { return seeds_; }

  // True if applying every generator to every member lands in the set.
  bool is_closed() const;

  void save(const std::filesystem::path& path) const;
  static StateSet load(const std::filesystem::path& path);

 private:
  friend StateSet closure(const std::vector<ExactState>&, const GeneratorSet&,
                          std::size_t, int);

  std::uint32_t insert(const ExactState& s);

  struct ParentEdge {
    std::int32_t parent = -1;
    std::int16_t gate = -1;
  };

  std::vector<ExactState> states_;
  std::vector<StateKey> keys_;
  std::vector<ParentEdge> parents_;
  std::vector<std::uint32_t> seeds_;
  std::vector<std::uint32_t> canonical_order_;
  std::unordered_map<StateKey, std::uint32_t, StateKeyHash> index_;
  GeneratorSet generators_{GeneratorSetName::LOCAL_C, {}};
};

inline constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

// Smallest set containing the seeds and closed under the generator set.
// Deterministic: the result (including the BFS tree) is independent of the
// worker count. Throws CapacityExceeded past the configured bound.
StateSet closure(const std::vector<ExactState>& seeds, const GeneratorSet& generators,
                 std::size_t capacity = kDefaultCapacity, int workers = 1);

}  // namespace qorbit
