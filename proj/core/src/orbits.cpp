#include "qorbit/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

struct WideGaussian {
  long long re = 0;
  long long im = 0;

  friend WideGaussian operator+(WideGaussian a, WideGaussian b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend WideGaussian operator-(WideGaussian a, WideGaussian b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend WideGaussian operator*(WideGaussian a, WideGaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  WideGaussian conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};

// Division-free exact rank of a small Gaussian-integer matrix. Entry growth
// over at most 3 cross-multiplication sweeps stays well inside int64.
int exact_rank(std::vector<std::vector<WideGaussian>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    for (int r = row + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      const WideGaussian f = m[r][col];
      const WideGaussian p = m[row][col];
      for (int c = col; c < cols; ++c) m[r][c] = p * m[r][c] - f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

void side_masks(std::uint8_t side_a, std::vector<int>& a_bits, std::vector<int>& b_bits) {
  a_bits.clear();
  b_bits.clear();
  for (int q = 0; q < 4; ++q)
    ((side_a >> q) & 1 ? a_bits : b_bits).push_back(1 << q);
}

int log2_exact(int value, const char* what) {
  int log = 0;
  while ((1 << log) < value) ++log;
  if ((1 << log) != value) throw InternalError(std::string(what) + " is not a power of two");
  return log;
}

}  // namespace

Rational Rational::reduced(long long num, long long den) {
  const long long g = std::gcd(num, den);
  return {g ? num / g : 0, g ? den / g : 1};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

int schmidt_rank(const ExactState& s, Bipartition cut) {
  if (cut.side_a_mask == 0 || cut.side_a_mask == 0b1111)
    throw Error("bipartition side must be a proper nonempty subset");
  std::vector<int> a_bits;
  std::vector<int> b_bits;
  side_masks(cut.side_a_mask, a_bits, b_bits);
  const int nrows = 1 << a_bits.size();
  const int ncols = 1 << b_bits.size();

  std::vector<std::vector<WideGaussian>> m(nrows, std::vector<WideGaussian>(ncols));
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) {
      int b = 0;
      for (std::size_t i = 0; i < a_bits.size(); ++i)
        if ((r >> i) & 1) b |= a_bits[i];
      for (std::size_t i = 0; i < b_bits.size(); ++i)
        if ((c >> i) & 1) b |= b_bits[i];
      m[r][c] = {s.amps[b].re, s.amps[b].im};
    }

  const int rank = exact_rank(m);

  // Flat-spectrum assertion: with G = MM+ and rank r, all nonzero
  // eigenvalues are equal iff r * G^2 == tr(G) * G exactly.
  std::vector<std::vector<WideGaussian>> g(nrows, std::vector<WideGaussian>(nrows));
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < nrows; ++j)
      for (int c = 0; c < ncols; ++c) g[i][j] = g[i][j] + m[i][c] * m[j][c].conj();
  long long trace = 0;
  for (int i = 0; i < nrows; ++i) trace += g[i][i].re;
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < nrows; ++j) {
      WideGaussian g2{};
      for (int l = 0; l < nrows; ++l) g2 = g2 + g[i][l] * g[l][j];
      const WideGaussian lhs{rank * g2.re, rank * g2.im};
      const WideGaussian rhs{trace * g[i][j].re, trace * g[i][j].im};
      if (!(lhs - rhs).is_zero())
        throw FlatSpectrumViolation("reduced spectrum is not flat");
    }
  return rank;
}

Fingerprint fingerprint(const ExactState& s) {
  Fingerprint fp;
  for (int q = 0; q < 4; ++q)
    fp.single[q] = log2_exact(
        schmidt_rank(s, {static_cast<std::uint8_t>(1 << q)}), "single-qubit rank");
  for (int c = 0; c < 3; ++c)
    fp.cut[c] = log2_exact(schmidt_rank(s, {kCutMasks[c]}), "cut rank");
  for (const auto& z : s.amps)
    if (!z.is_zero()) ++fp.support_size;
  return fp;
}

Rational entanglement_entropy(const ExactState& s) {
  int sum = 0;
  for (std::uint8_t mask : kCutMasks)
    sum += log2_exact(schmidt_rank(s, {mask}), "cut rank");
  return Rational::reduced(sum, 3);
}

OrbitPartition partition(const StateSet& set, const GeneratorSet& locals) {
  const auto n = set.size();
  OrbitPartition p;
  p.orbit_of.assign(n, -1);

  std::vector<std::uint32_t> queue;
  std::vector<std::uint32_t> reps;  // provisional id -> minimal member
  for (std::uint32_t start_rank = 0; start_rank < n; ++start_rank) {
    // Scanning in canonical order makes the first state of each component
    // its minimal-encoding member.
    const std::uint32_t start = set.canonical_order()[start_rank];
    if (p.orbit_of[start] >= 0) continue;
    const auto id = static_cast<std::int32_t>(reps.size());
    reps.push_back(start);
    p.orbit_of[start] = id;
    queue.assign(1, start);
    while (!queue.empty()) {
      const std::uint32_t cur = queue.back();
      queue.pop_back();
      for (const Gate& g : locals.gates) {
        const auto img = set.find(apply_gate(set.state(cur), g));
        if (!img) throw NotClosed("local generator image leaves the set");
        if (p.orbit_of[*img] < 0) {
          p.orbit_of[*img] = id;
          queue.push_back(*img);
        }
      }
    }
  }

  // Components were discovered in canonical order of their minimal members,
  // so provisional ids are already the deterministic ids.
  p.orbits.resize(reps.size());
  for (std::size_t id = 0; id < reps.size(); ++id) p.orbits[id].rep_idx = reps[id];
  for (std::uint32_t i = 0; i < n; ++i) ++p.orbits[p.orbit_of[i]].size;
  for (auto& orbit : p.orbits) {
    orbit.fp = fingerprint(set.state(orbit.rep_idx));
    orbit.fp.support_size = 0;  // not a local invariant
    int sum = orbit.fp.cut[0] + orbit.fp.cut[1] + orbit.fp.cut[2];
    orbit.entropy = Rational::reduced(sum, 3);
  }
  return p;
}

namespace {

std::string pair_name(int a, int b) {
  return std::to_string(std::min(a, b)) + std::to_string(std::max(a, b));
}

// Label family from a fingerprint, complex-case names.
std::string structural_label(const Fingerprint& fp) {
  const int singles_one =
      fp.single[0] + fp.single[1] + fp.single[2] + fp.single[3];
  if (singles_one == 0) return "S0";
  if (singles_one == 2) {
    std::vector<int> qs;
    for (int q = 0; q < 4; ++q)
      if (fp.single[q] == 1) qs.push_back(q + 1);
    return "T" + pair_name(qs[0], qs[1]);
  }
  if (singles_one == 3) {
    for (int q = 0; q < 4; ++q)
      if (fp.single[q] == 0) return "V" + std::to_string(q + 1);
  }
  if (singles_one == 4) {
    int zeros = 0, ones = 0, twos = 0;
    for (int c = 0; c < 3; ++c) {
      zeros += fp.cut[c] == 0;
      ones += fp.cut[c] == 1;
      twos += fp.cut[c] == 2;
    }
    if (ones == 3) return "W";
    if (zeros == 1 && twos == 2) {
      for (int c = 0; c < 3; ++c)
        if (fp.cut[c] == 0) return std::string("U") + kCutNames[c];
    }
    if (ones == 1 && twos == 2) {
      for (int c = 0; c < 3; ++c)
        if (fp.cut[c] == 1) return std::string("X") + kCutNames[c];
    }
  }
  throw AmbiguousLabel("fingerprint matches no known orbit family");
}

}  // namespace

void label_complex_orbits(const StateSet& set, OrbitPartition& p) {
  (void)set;
  std::set<std::string> seen;
  for (auto& orbit : p.orbits) {
    orbit.label = structural_label(orbit.fp);
    if (!seen.insert(orbit.label).second)
      throw AmbiguousLabel("duplicate complex orbit label " + orbit.label);
  }
}

void label_real_orbits(const StateSet& set, OrbitPartition& p) {
  // Family from the fingerprint, hat (spelled as a ^ prefix) from the size.
  std::int32_t what_orbit = -1;  // the unique size-64 orbit (^Wr)
  for (std::size_t id = 0; id < p.orbits.size(); ++id) {
    auto& orbit = p.orbits[id];
    const std::string family = structural_label(orbit.fp);
    if (family[0] == 'V') {
      orbit.label = orbit.size == 128 ? "^" + family : family;
    } else if (family == "W") {
      orbit.label = orbit.size == 64 ? "^W" : "W";
      if (orbit.size == 64) what_orbit = static_cast<std::int32_t>(id);
    } else if (family[0] == 'X' && orbit.size == 256) {
      orbit.label = "^X?";  // subscript resolved below
    } else {
      orbit.label = family;
    }
  }
  if (what_orbit < 0) throw AmbiguousLabel("no size-64 orbit in the real set");

  // A hatted X orbit ^Xab is the one the CZ{a,b} gate (and no other pair)
  // maps into the ^W orbit.
  const auto czs = cz_gates();
  for (std::size_t id = 0; id < p.orbits.size(); ++id) {
    auto& orbit = p.orbits[id];
    if (orbit.label != "^X?") continue;
    std::set<std::string> pairs;
    for (std::uint32_t i = 0; i < set.size(); ++i) {
      if (p.orbit_of[i] != static_cast<std::int32_t>(id)) continue;
      for (const Gate& g : czs) {
        const auto img = set.find(apply_gate(set.state(i), g));
        if (!img) throw NotClosed("CZ image leaves the set");
        if (p.orbit_of[*img] == what_orbit) pairs.insert(pair_name(g.q1, g.q2));
      }
    }
    if (pairs.size() != 1)
      throw AmbiguousLabel("hatted-X orbit reaches ^W under " +
                           std::to_string(pairs.size()) + " gate pairs");
    orbit.label = "^X" + *pairs.begin();
  }

  std::set<std::string> seen;
  for (auto& orbit : p.orbits) {
    orbit.label += "r";
    if (!seen.insert(orbit.label).second)
      throw AmbiguousLabel("duplicate real orbit label " + orbit.label);
  }
}

std::string orbit_report_jsonl(const StateSet& set, const OrbitPartition& p) {
  std::ostringstream out;
  for (const auto& orbit : p.orbits) {
    out << "{\"label\":\"" << orbit.label << "\",\"size\":" << orbit.size
        << ",\"entropy\":\"" << orbit.entropy.str() << "\",\"fingerprint\":{\"single\":[";
    for (int q = 0; q < 4; ++q) out << (q ? "," : "") << orbit.fp.single[q];
    out << "],\"cut\":[";
    for (int c = 0; c < 3; ++c) out << (c ? "," : "") << orbit.fp.cut[c];
    out << "]},\"representative\":\"" << to_hex(set.key(orbit.rep_idx)) << "\"}\n";
  }
  return out.str();
}

}  // namespace qorbit
