#include "qorbit/closure.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <future>
#include <numeric>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

constexpr char kMagic[8] = {'Q', 'O', 'R', 'B', 'S', 'E', 'T', '1'};

// Empirical bounds for everything reachable in this artifact.
void check_bounds(const ExactState& s) {
  if (s.k > 8) throw InternalError("state exponent k exceeds 8");
  for (const auto& z : s.amps)
    if (z.re < -16 || z.re > 16 || z.im < -16 || z.im > 16)
      throw InternalError("amplitude component exceeds 16");
}

template <typename T>
void write_raw(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(value));
}

template <typename T>
T read_raw(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(value));
  if (!in) throw DecodeError("truncated state-set file");
  return value;
}

}  // namespace

std::optional<std::uint32_t> StateSet::find(const ExactState& s) const {
  return find_key(encode(s));
}

std::optional<std::uint32_t> StateSet::find_key(const StateKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t StateSet::insert(const ExactState& s) {
  check_bounds(s);
  const auto idx = static_cast<std::uint32_t>(states_.size());
  states_.push_back(s);
  keys_.push_back(encode(s));
  parents_.push_back({});
  index_.emplace(keys_.back(), idx);
  return idx;
}

Circuit StateSet::word_to(std::uint32_t idx) const {
  if (idx >= states_.size()) throw NotInSet("state index out of range");
  if (parents_.empty()) throw InternalError("state set has no BFS tree");
  Circuit word;
  std::int32_t cur = static_cast<std::int32_t>(idx);
  while (parents_[cur].parent >= 0) {
    word.push_back(generators_.gates[parents_[cur].gate]);
    cur = parents_[cur].parent;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Circuit StateSet::word_to(const ExactState& target) const {
  auto idx = find(target);
  if (!idx) throw NotInSet("target state is not in the set");
  return word_to(*idx);
}

bool StateSet::is_closed() const {
  for (const auto& s : states_)
    for (const Gate& g : generators_.gates)
      if (!index_.contains(encode(apply_gate(s, g)))) return false;
  return true;
}

void StateSet::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(kMagic, sizeof(kMagic));
  write_raw<std::uint32_t>(out, 1);
  const std::string name = generator_set_name(generators_.name);
  write_raw<std::uint8_t>(out, static_cast<std::uint8_t>(name.size()));
  out.write(name.data(), static_cast<std::streamsize>(name.size()));
  write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(seeds_.size()));
  for (std::uint32_t seed : seeds_)
    out.write(reinterpret_cast<const char*>(keys_[seed].data()), kEncodedSize);
  write_raw<std::uint64_t>(out, states_.size());
  for (std::uint32_t idx : canonical_order_)
    out.write(reinterpret_cast<const char*>(keys_[idx].data()), kEncodedSize);
  if (!out) throw Error("write failed: " + path.string());
}

StateSet StateSet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw DecodeError("bad magic in " + path.string());
  if (read_raw<std::uint32_t>(in) != 1)
    throw DecodeError("unsupported state-set version");
  const auto name_len = read_raw<std::uint8_t>(in);
  std::string name(name_len, '\0');
  in.read(name.data(), name_len);
  if (!in) throw DecodeError("truncated state-set file");

  StateSet set;
  set.generators_ = generator_set(generator_set_from_name(name));
  const auto seed_count = read_raw<std::uint32_t>(in);
  std::vector<StateKey> seed_keys(seed_count);
  for (auto& key : seed_keys)
    in.read(reinterpret_cast<char*>(key.data()), kEncodedSize);
  const auto count = read_raw<std::uint64_t>(in);
  set.states_.reserve(count);
  StateKey record;
  for (std::uint64_t i = 0; i < count; ++i) {
    in.read(reinterpret_cast<char*>(record.data()), kEncodedSize);
    if (!in) throw DecodeError("truncated state-set file");
    const ExactState s = decode(record);
    if (set.index_.contains(record)) throw DecodeError("duplicate state record");
    set.insert(s);
  }
  set.parents_.clear();  // no BFS tree in the file
  set.canonical_order_.resize(set.states_.size());
  std::iota(set.canonical_order_.begin(), set.canonical_order_.end(), 0u);
  for (std::size_t i = 1; i < set.keys_.size(); ++i)
    if (!key_less(set.keys_[i - 1], set.keys_[i]))
      throw DecodeError("state records out of canonical order");
  for (const auto& key : seed_keys) {
    auto idx = set.find_key(key);
    if (!idx) throw DecodeError("seed state missing from set");
    set.seeds_.push_back(*idx);
  }
  return set;
}

StateSet closure(const std::vector<ExactState>& seeds, const GeneratorSet& generators,
                 std::size_t capacity, int workers) {
  StateSet set;
  set.generators_ = generators;
  for (const ExactState& seed : seeds) {
    if (!is_canonical(seed)) throw NormalizationViolation("seed is not canonical");
    if (!set.find(seed)) set.seeds_.push_back(set.insert(seed));
  }

  struct Candidate {
    ExactState state;
    std::uint32_t parent;
    std::int16_t gate;
  };

  std::size_t frontier_lo = 0;
  while (frontier_lo < set.states_.size()) {
    const std::size_t frontier_hi = set.states_.size();
    const std::size_t frontier_size = frontier_hi - frontier_lo;
    const int nworkers =
        std::max(1, std::min<int>(workers, static_cast<int>(frontier_size / 1024 + 1)));

    auto expand = [&](std::size_t lo, std::size_t hi) {
      std::vector<Candidate> found;
      for (std::size_t i = lo; i < hi; ++i) {
        const ExactState parent = set.states_[i];  // copy: states_ may grow
        for (std::size_t g = 0; g < generators.gates.size(); ++g) {
          ExactState child = apply_gate(parent, generators.gates[g]);
          if (!set.index_.contains(encode(child)))
            found.push_back({std::move(child), static_cast<std::uint32_t>(i),
                             static_cast<std::int16_t>(g)});
        }
      }
      return found;
    };

    std::vector<std::vector<Candidate>> chunks;
    if (nworkers == 1) {
      chunks.push_back(expand(frontier_lo, frontier_hi));
    } else {
      // Workers only read the pre-round index; the serial merge below keeps
      // insertion order identical to the single-threaded run.
      std::vector<std::future<std::vector<Candidate>>> futures;
      const std::size_t chunk = (frontier_size + nworkers - 1) / nworkers;
      for (int w = 0; w < nworkers; ++w) {
        const std::size_t lo = frontier_lo + w * chunk;
        const std::size_t hi = std::min(frontier_hi, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, expand, lo, hi));
      }
      for (auto& f : futures) chunks.push_back(f.get());
    }

    for (auto& found : chunks) {
      for (auto& cand : found) {
        const StateKey key = encode(cand.state);
        if (set.index_.contains(key)) continue;
        if (set.states_.size() >= capacity)
          throw CapacityExceeded("closure exceeded capacity " + std::to_string(capacity));
        const std::uint32_t idx = set.insert(cand.state);
        set.parents_[idx] = {static_cast<std::int32_t>(cand.parent), cand.gate};
      }
    }
    frontier_lo = frontier_hi;
  }

  set.canonical_order_.resize(set.states_.size());
  std::iota(set.canonical_order_.begin(), set.canonical_order_.end(), 0u);
  std::sort(set.canonical_order_.begin(), set.canonical_order_.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return key_less(set.keys_[a], set.keys_[b]);
            });
  return set;
}

}  // namespace qorbit
