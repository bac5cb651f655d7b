// Acceptance suite: one pass/fail line per criterion, checked against the
// published size/entropy tables, transition censuses, connectivity diagrams,
// population counts, and per-orbit representatives.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "qorbit/anchors.hpp"
#include "qorbit/closure.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/gates.hpp"
#include "qorbit/ket_expr.hpp"
#include "qorbit/orbits.hpp"
#include "qorbit/populations.hpp"
#include "qorbit/transitions.hpp"

using namespace qorbit;

namespace {

constexpr int kWorkers = 4;

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << n << (ok ? " PASS " : " FAIL ") << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

// ---- qubit-pair helpers for the symbolic golden tables ----

struct Pr {
  int i, j;  // i < j
  friend bool operator==(const Pr&, const Pr&) = default;
};

const std::array<Pr, 6> kPairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
const std::array<Pr, 3> kClasses = {{{1, 2}, {1, 3}, {1, 4}}};  // class = pair with 1

std::string pstr(Pr p) { return std::to_string(p.i) + std::to_string(p.j); }

Pr pcomp(Pr p) {
  std::vector<int> rest;
  for (int q = 1; q <= 4; ++q)
    if (q != p.i && q != p.j) rest.push_back(q);
  return {rest[0], rest[1]};
}

Pr pmake(int a, int b) { return a < b ? Pr{a, b} : Pr{b, a}; }

bool contains(Pr p, int q) { return p.i == q || p.j == q; }

int overlap(Pr a, Pr b) {
  return int(contains(a, b.i)) + int(contains(a, b.j));
}

// Class label "12/34" for the unordered pair-of-pairs containing p.
std::string xcls(Pr p) {
  const Pr lead = contains(p, 1) ? p : pcomp(p);
  return pstr(lead) + "/" + pstr(pcomp(lead));
}

// The one qubit outside ab and ij, defined when they share exactly one.
int missing(Pr ab, Pr ij) {
  for (int q = 1; q <= 4; ++q)
    if (!contains(ab, q) && !contains(ij, q)) return q;
  throw InternalError("pairs cover all qubits");
}

using Row = std::map<std::string, std::int64_t>;
using Census = std::map<std::string, std::map<std::string, Row>>;  // src -> pair -> row

// Complex transition table, with the one corrected cell: the published "1526"
// (U row, matching gate) must be 1536 for the row to sum to 4608.
Census expected_complex_census() {
  Census e;
  for (Pr ij : kPairs) {
    const std::string gp = pstr(ij);
    e["S0"][gp] = {{"S0", 5760}, {"T" + pstr(ij), 4608}};
    for (Pr ab : kPairs) {
      const std::string t = "T" + pstr(ab);
      if (ab == ij)
        e[t][gp] = {{t, 2304}, {"S0", 4608}};
      else if (overlap(ab, ij) == 0)
        e[t][gp] = {{t, 3840}, {"U" + xcls(ab), 3072}};
      else
        e[t][gp] = {{t, 2304}, {"V" + std::to_string(missing(ab, ij)), 4608}};
    }
    for (Pr ab : kClasses) {
      const std::string u = "U" + xcls(ab);
      if (ij == ab || ij == pcomp(ab))
        e[u][gp] = {{"T" + pstr(pcomp(ij)), 3072}, {u, 1536}};
      else
        e[u][gp] = {{"X" + xcls(ab), 4608}};
    }
    for (int a = 1; a <= 4; ++a) {
      const std::string v = "V" + std::to_string(a);
      if (contains(ij, a))
        e[v][gp] = {{v, 6912}, {"W", 4608}, {"X" + xcls(ij), 9216}};
      else
        e[v][gp] = {{v, 11520},
                    {"T" + pstr(pcomp(pmake(a, ij.i))), 4608},
                    {"T" + pstr(pcomp(pmake(a, ij.j))), 4608}};
    }
    e["W"][gp] = {{"W", 2304},
                  {"X" + xcls(ij), 9216},
                  {"V" + std::to_string(ij.i), 4608},
                  {"V" + std::to_string(ij.j), 4608}};
    for (Pr ab : kClasses) {
      const std::string x = "X" + xcls(ab);
      if (ij == ab || ij == pcomp(ab)) {
        e[x][gp] = {{x, 13824},
                    {"V" + std::to_string(ij.i), 9216},
                    {"V" + std::to_string(ij.j), 9216},
                    {"W", 9216}};
      } else {
        Row r = {{"U" + xcls(ab), 4608}};
        for (Pr cd : kClasses)
          if (xcls(cd) != xcls(ij)) r["X" + xcls(cd)] += 18432;
        e[x][gp] = r;
      }
    }
  }
  return e;
}

// Real transition table. One corrected row: the published hatted-W row sends
// its 64 elements to the hatted X over the complementary pair, which
// contradicts the hatted-X and hatted-V rows of the same table (CZ is an
// involution, so counts must be symmetric); the involution-consistent target
// is the gate's own pair, and the computed census is checked against that.
Census expected_real_census() {
  Census e;
  for (Pr ij : kPairs) {
    const std::string gp = pstr(ij);
    e["S0r"][gp] = {{"S0r", 384}, {"T" + pstr(ij) + "r", 128}};
    for (Pr ab : kPairs) {
      const std::string t = "T" + pstr(ab) + "r";
      if (ab == ij)
        e[t][gp] = {{t, 128}, {"S0r", 128}};
      else if (overlap(ab, ij) == 0)
        e[t][gp] = {{t, 192}, {"U" + xcls(ab) + "r", 64}};
      else
        e[t][gp] = {{t, 128}, {"V" + std::to_string(missing(ab, ij)) + "r", 128}};
    }
    for (Pr ab : kClasses) {
      const std::string u = "U" + xcls(ab) + "r";
      if (ij == ab || ij == pcomp(ab))
        e[u][gp] = {{"T" + pstr(pcomp(ij)) + "r", 64}, {u, 64}};
      else
        e[u][gp] = {{"X" + xcls(ab) + "r", 128}};
    }
    for (int a = 1; a <= 4; ++a) {
      const std::string v = "V" + std::to_string(a) + "r";
      const std::string hv = "^V" + std::to_string(a) + "r";
      if (contains(ij, a)) {
        e[v][gp] = {{v, 256}, {"Wr", 128}, {"X" + xcls(ij) + "r", 128}};
        e[hv][gp] = {{hv, 64}, {"^X" + pstr(ij) + "r", 64}};
      } else {
        e[v][gp] = {{v, 128},
                    {"T" + pstr(pcomp(pmake(a, ij.i))) + "r", 128},
                    {"T" + pstr(pcomp(pmake(a, ij.j))) + "r", 128},
                    {hv, 128}};
        e[hv][gp] = {{v, 128}};
      }
    }
    e["Wr"][gp] = {{"Wr", 128},
                   {"^X" + pstr(pcomp(ij)) + "r", 128},
                   {"V" + std::to_string(ij.i) + "r", 128},
                   {"V" + std::to_string(ij.j) + "r", 128}};
    e["^Wr"][gp] = {{"^X" + pstr(ij) + "r", 64}};
    for (Pr p : kClasses) {
      const Pr q = pcomp(p);
      const std::string x = "X" + xcls(p) + "r";
      if (ij == p || ij == q) {
        e[x][gp] = {{x, 128},
                    {"V" + std::to_string(ij.i) + "r", 128},
                    {"V" + std::to_string(ij.j) + "r", 128},
                    {"^X" + pstr(pcomp(ij)) + "r", 128}};
      } else {
        const int a = contains(p, ij.i) ? ij.i : ij.j;  // gate leg inside p
        const int c = (a == ij.i) ? ij.j : ij.i;        // gate leg inside q
        const int b = (p.i == a) ? p.j : p.i;
        e[x][gp] = {{"U" + xcls(p) + "r", 128},
                    {"X" + xcls(pmake(b, c)) + "r", 128},
                    {"^X" + pstr(p) + "r", 128},
                    {"^X" + pstr(q) + "r", 128}};
      }
    }
    for (Pr ab : kPairs) {
      const std::string hx = "^X" + pstr(ab) + "r";
      if (ab == ij)
        e[hx][gp] = {{"^Wr", 64},
                     {hx, 64},
                     {"^V" + std::to_string(ab.i) + "r", 64},
                     {"^V" + std::to_string(ab.j) + "r", 64}};
      else if (overlap(ab, ij) == 0)
        e[hx][gp] = {{"Wr", 128}, {"X" + xcls(ab) + "r", 128}};
      else {
        const int shared = contains(ab, ij.i) ? ij.i : ij.j;
        const int c = (shared == ij.i) ? ij.j : ij.i;
        const int b = (ab.i == shared) ? ab.j : ab.i;
        e[hx][gp] = {{"^X" + pstr(pcomp(pmake(b, c))) + "r", 128},
                     {"X" + xcls(ab) + "r", 128}};
      }
    }
  }
  return e;
}

using EdgeSet = std::set<std::pair<std::string, std::string>>;

void add_edge(EdgeSet& s, std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  s.emplace(a, b);
}

EdgeSet expected_complex_edges() {
  EdgeSet s;
  for (Pr ij : kPairs) {
    add_edge(s, "S0", "T" + pstr(ij));
    add_edge(s, "T" + pstr(ij), "U" + xcls(ij));
    const Pr c = pcomp(ij);
    add_edge(s, "T" + pstr(ij), "V" + std::to_string(c.i));
    add_edge(s, "T" + pstr(ij), "V" + std::to_string(c.j));
  }
  for (Pr cl : kClasses) {
    add_edge(s, "U" + xcls(cl), "X" + xcls(cl));
    add_edge(s, "W", "X" + xcls(cl));
    for (int a = 1; a <= 4; ++a) add_edge(s, "V" + std::to_string(a), "X" + xcls(cl));
  }
  for (int a = 1; a <= 4; ++a) add_edge(s, "V" + std::to_string(a), "W");
  for (Pr a : kClasses)
    for (Pr b : kClasses)
      if (pstr(a) < pstr(b)) add_edge(s, "X" + xcls(a), "X" + xcls(b));
  return s;
}

EdgeSet expected_real_edges() {
  EdgeSet s;
  for (Pr ij : kPairs) {
    add_edge(s, "S0r", "T" + pstr(ij) + "r");
    add_edge(s, "T" + pstr(ij) + "r", "U" + xcls(ij) + "r");
    const Pr c = pcomp(ij);
    add_edge(s, "T" + pstr(ij) + "r", "V" + std::to_string(c.i) + "r");
    add_edge(s, "T" + pstr(ij) + "r", "V" + std::to_string(c.j) + "r");
    add_edge(s, "Wr", "^X" + pstr(ij) + "r");
    add_edge(s, "^Wr", "^X" + pstr(ij) + "r");
    // X over a class touches the hatted X of each of its two pairs.
    add_edge(s, "X" + xcls(ij) + "r", "^X" + pstr(ij) + "r");
  }
  for (Pr cl : kClasses) {
    add_edge(s, "U" + xcls(cl) + "r", "X" + xcls(cl) + "r");
    for (int a = 1; a <= 4; ++a)
      add_edge(s, "V" + std::to_string(a) + "r", "X" + xcls(cl) + "r");
  }
  for (int a = 1; a <= 4; ++a) {
    add_edge(s, "V" + std::to_string(a) + "r", "Wr");
    add_edge(s, "V" + std::to_string(a) + "r", "^V" + std::to_string(a) + "r");
    for (int c = 1; c <= 4; ++c)
      if (c != a)
        add_edge(s, "^V" + std::to_string(a) + "r", "^X" + pstr(pmake(a, c)) + "r");
  }
  for (Pr a : kClasses)
    for (Pr b : kClasses)
      if (pstr(a) < pstr(b)) add_edge(s, "X" + xcls(a) + "r", "X" + xcls(b) + "r");
  for (Pr a : kPairs)
    for (Pr b : kPairs)
      if (pstr(a) < pstr(b) && overlap(a, b) == 1)
        add_edge(s, "^X" + pstr(a) + "r", "^X" + pstr(b) + "r");
  return s;
}

// ---- shared per-mode context ----

struct ModeCtx {
  StateSet set;
  OrbitPartition p;
  TransitionCensus cz;
  OrbitGraph graph;
  std::map<std::string, int> orbit_id;

  explicit ModeCtx(bool real)
      : set(closure({zero_state()},
                    generator_set(real ? GeneratorSetName::FULL_R : GeneratorSetName::FULL_C),
                    kDefaultCapacity, kWorkers)),
        p(partition(set, generator_set(real ? GeneratorSetName::LOCAL_R
                                            : GeneratorSetName::LOCAL_C))) {
    if (real)
      label_real_orbits(set, p);
    else
      label_complex_orbits(set, p);
    cz = census(set, p, cz_gates(), kWorkers);
    graph = build_graph(cz, p);
    for (std::size_t i = 0; i < p.orbits.size(); ++i)
      orbit_id[p.orbits[i].label] = static_cast<int>(i);
  }
};

std::string family_of(const std::string& label) {
  const std::size_t at = (label[0] == '^') ? 1 : 0;
  return label.substr(at, 1);
}

Rational family_entropy(const std::string& label) {
  const std::string f = family_of(label);
  if (f == "S") return Rational::reduced(0, 1);
  if (f == "T") return Rational::reduced(2, 3);
  if (f == "U") return Rational::reduced(4, 3);
  if (f == "V" || f == "W") return Rational::reduced(1, 1);
  return Rational::reduced(5, 3);
}

bool compare_census(const ModeCtx& ctx, const Census& expected, std::string& detail) {
  for (std::size_t o = 0; o < ctx.p.orbits.size(); ++o)
    for (std::size_t g = 0; g < ctx.cz.gates.size(); ++g) {
      Row computed;
      for (std::size_t t = 0; t < ctx.p.orbits.size(); ++t)
        if (ctx.cz.counts[o][g][t] != 0)
          computed[ctx.p.orbits[t].label] = ctx.cz.counts[o][g][t];
      const std::string gp =
          std::to_string(ctx.cz.gates[g].q1) + std::to_string(ctx.cz.gates[g].q2);
      const auto src_it = expected.find(ctx.p.orbits[o].label);
      const Row want = (src_it != expected.end() && src_it->second.count(gp))
                           ? src_it->second.at(gp)
                           : Row{};
      if (computed != want) {
        std::ostringstream os;
        os << ctx.p.orbits[o].label << " under CZ(" << gp << "):";
        for (const auto& [lbl, n] : computed) os << " " << n << "->" << lbl;
        detail = os.str();
        return false;
      }
    }
  return true;
}

EdgeSet computed_edges(const ModeCtx& ctx) {
  EdgeSet s;
  for (const auto& [pair, gates] : ctx.graph.edges)
    add_edge(s, ctx.graph.labels[pair.first], ctx.graph.labels[pair.second]);
  return s;
}

}  // namespace

int main() {
  std::cout << "building complex and real closures..." << std::endl;
  const ModeCtx cx(false);
  const ModeCtx rx(true);

  // 1. enumeration counts
  report(1, "enumeration counts 293760 complex / 8640 real",
         cx.set.size() == 293760 && rx.set.size() == 8640,
         std::to_string(cx.set.size()) + " / " + std::to_string(rx.set.size()));

  // 2. orbit counts and sizes
  {
    bool ok = cx.p.orbits.size() == 18 && rx.p.orbits.size() == 29;
    std::map<std::string, std::uint32_t> expect_cx;
    expect_cx["S0"] = 10368;
    for (Pr p : kPairs) expect_cx["T" + pstr(p)] = 6912;
    for (Pr c : kClasses) expect_cx["U" + xcls(c)] = 4608;
    for (int a = 1; a <= 4; ++a) expect_cx["V" + std::to_string(a)] = 20736;
    expect_cx["W"] = 20736;
    for (Pr c : kClasses) expect_cx["X" + xcls(c)] = 41472;
    std::map<std::string, std::uint32_t> got_cx;
    for (const auto& o : cx.p.orbits) got_cx[o.label] = o.size;
    ok = ok && got_cx == expect_cx;

    std::map<std::string, std::uint32_t> expect_rx;
    expect_rx["S0r"] = 512;
    for (Pr p : kPairs) expect_rx["T" + pstr(p) + "r"] = 256;
    for (Pr c : kClasses) expect_rx["U" + xcls(c) + "r"] = 128;
    for (int a = 1; a <= 4; ++a) {
      expect_rx["V" + std::to_string(a) + "r"] = 512;
      expect_rx["^V" + std::to_string(a) + "r"] = 128;
    }
    expect_rx["Wr"] = 512;
    expect_rx["^Wr"] = 64;
    for (Pr c : kClasses) expect_rx["X" + xcls(c) + "r"] = 512;
    for (Pr p : kPairs) expect_rx["^X" + pstr(p) + "r"] = 256;
    std::map<std::string, std::uint32_t> got_rx;
    for (const auto& o : rx.p.orbits) got_rx[o.label] = o.size;
    ok = ok && got_rx == expect_rx;
    report(2, "orbit counts and sizes (18 complex, 29 real)", ok);
  }

  // 3. entropy spectrum
  {
    bool ok = true;
    std::set<Rational> values;
    for (const ModeCtx* ctx : {&cx, &rx}) {
      for (const auto& o : ctx->p.orbits) {
        ok = ok && o.entropy == family_entropy(o.label);
        values.insert(o.entropy);
      }
      for (std::uint32_t i = 0; ok && i < ctx->set.size(); ++i)
        ok = entanglement_entropy(ctx->set.state(i)) ==
             ctx->p.orbits[ctx->p.orbit_of[i]].entropy;
    }
    const std::set<Rational> expect = {Rational::reduced(0, 1), Rational::reduced(2, 3),
                                       Rational::reduced(1, 1), Rational::reduced(4, 3),
                                       Rational::reduced(5, 3)};
    ok = ok && values == expect && *values.rbegin() == Rational::reduced(5, 3);
    report(3, "entropy constant per orbit with spectrum {0,2/3,1,4/3,5/3}, max 5/3", ok);
  }

  // 4. transition tables
  {
    std::string detail;
    bool ok = compare_census(cx, expected_complex_census(), detail);
    if (ok) {
      std::cerr << "warning: published complex table cell \"1526\" (U row, matching "
                   "gate) disagrees with its row sum; computed value is 1536"
                << std::endl;
      ok = compare_census(rx, expected_real_census(), detail);
      if (ok)
        std::cerr << "warning: published real table ^W row sends its 64 elements to "
                     "the hatted X over the complementary pair; the computed census "
                     "(and the table's own hatted-X row) gives the gate's pair itself"
                  << std::endl;
    }
    report(4, "transition censuses match cell-for-cell (1526 -> 1536 corrected)", ok,
           detail);
  }

  // 5. connectivity diagrams and diameters
  {
    const bool edges_ok = computed_edges(cx) == expected_complex_edges() &&
                          computed_edges(rx) == expected_real_edges();
    const bool diam_ok = diameter(cx.graph) == 3 && diameter(rx.graph) == 5;
    report(5, "orbit graphs match the diagrams; diameters 3 and 5",
           edges_ok && diam_ok);
  }

  // 6. circuit synthesis
  {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(2026);
    for (const ModeCtx* ctx : {&cx, &rx}) {
      const OrbitNavigator nav(ctx->set, ctx->p,
                               generator_set(ctx == &cx ? GeneratorSetName::LOCAL_C
                                                        : GeneratorSetName::LOCAL_R));
      std::uniform_int_distribution<std::uint32_t> pick(
          0, static_cast<std::uint32_t>(ctx->set.size() - 1));
      for (int trial = 0; ok && trial < 1000; ++trial) {
        const ExactState a = ctx->set.state(pick(rng));
        const ExactState b = ctx->set.state(pick(rng));
        const Circuit c = nav.connect(a, b);
        if (apply_circuit(a, c) != b) {
          ok = false;
          detail = "replay failed";
        } else if (cnot_count(c) > nav.orbit_distance(a, b)) {
          ok = false;
          detail = "exceeded the orbit-graph distance";
        }
      }
      const std::string far = (ctx == &cx) ? "X12/34" : "^Wr";
      const int want = (ctx == &cx) ? 3 : 5;
      const ExactState target =
          ctx->set.state(ctx->p.orbits[ctx->orbit_id.at(far)].rep_idx);
      const Circuit c = nav.connect(zero_state(), target);
      if (cnot_count(c) != want || apply_circuit(zero_state(), c) != target) {
        ok = false;
        detail = far + " needs " + std::to_string(want) + " entanglers";
      }
    }
    report(6, "connect replays 1000 random pairs per mode; S0->X uses 3, S0r->^Wr 5",
           ok, detail);
  }

  // 7. population census
  {
    bool ok = true;
    std::string detail;
    try {
      const PopulationCensus c = population_census(cx.set);
      ok = c.count_by_size == std::map<int, std::int64_t>{{1, 16},
                                                          {2, 120},
                                                          {4, 140},
                                                          {8, 30},
                                                          {16, 1}} &&
           c.total() == 307;
    } catch (const NonUniform& e) {
      ok = false;
      detail = e.what();
    }
    report(7, "uniform populations; 307 distinct supports {16,120,140,30,1}", ok,
           detail);
  }

  // 8. property suite
  {
    bool ok = true;
    std::string detail;
    try {
      // Norm preservation: every real state under every generator; 10^4
      // sampled complex states likewise.
      const auto& real_gens = generator_set(GeneratorSetName::FULL_R).gates;
      for (std::uint32_t i = 0; ok && i < rx.set.size(); ++i)
        for (const Gate& g : real_gens)
          ok = ok && is_canonical(apply_gate(rx.set.state(i), g));
      const auto& cx_gens = generator_set(GeneratorSetName::FULL_C).gates;
      std::mt19937 rng(8);
      std::uniform_int_distribution<std::uint32_t> pick(
          0, static_cast<std::uint32_t>(cx.set.size() - 1));
      for (int trial = 0; ok && trial < 10000; ++trial) {
        const ExactState s = cx.set.state(pick(rng));
        for (const Gate& g : cx_gens) ok = ok && is_canonical(apply_gate(s, g));
      }
      if (!ok) detail = "norm preservation";

      // CZ and both CNOT orientations give the same orbit census.
      for (const ModeCtx* ctx : {&cx, &rx}) {
        const TransitionCensus cn = census(ctx->set, ctx->p, cnot_gates(), kWorkers);
        auto cnot_index = [&cn](int c, int t) {
          for (std::size_t g = 0; g < cn.gates.size(); ++g)
            if (cn.gates[g].q1 == c && cn.gates[g].q2 == t) return g;
          throw InternalError("missing CNOT gate");
        };
        for (std::size_t pair = 0; ok && pair < ctx->cz.gates.size(); ++pair) {
          const Gate g = ctx->cz.gates[pair];
          for (std::size_t o = 0; ok && o < ctx->p.orbits.size(); ++o)
            ok = ctx->cz.counts[o][pair] == cn.counts[o][cnot_index(g.q1, g.q2)] &&
                 ctx->cz.counts[o][pair] == cn.counts[o][cnot_index(g.q2, g.q1)];
        }
        if (!ok) detail = "CZ/CNOT census equality";
      }

      // Involutions on samples from both sets.
      for (const ModeCtx* ctx : {&cx, &rx}) {
        std::uniform_int_distribution<std::uint32_t> pk(
            0, static_cast<std::uint32_t>(ctx->set.size() - 1));
        for (int trial = 0; ok && trial < 200; ++trial) {
          const ExactState s = ctx->set.state(pk(rng));
          for (int q = 1; ok && q <= 4; ++q) {
            ok = apply_gate(apply_gate(s, make_h(q)), make_h(q)) == s &&
                 apply_gate(apply_gate(s, make_z(q)), make_z(q)) == s &&
                 apply_gate(apply_gate(s, make_x(q)), make_x(q)) == s;
            ExactState p4 = s;
            for (int r = 0; r < 4; ++r) p4 = apply_gate(p4, make_p(q));
            ok = ok && p4 == s;
          }
          ok = ok && apply_gate(apply_gate(s, make_cnot(1, 3)), make_cnot(1, 3)) == s &&
               apply_gate(apply_gate(s, make_cz(2, 4)), make_cz(2, 4)) == s;
        }
        if (!ok) detail = "involutions";
      }

      // Flat spectrum never fires: criterion 3 already ran schmidt_rank on
      // every state of both sets without a FlatSpectrumViolation escaping;
      // re-run a sample here under an explicit catch.
      for (int trial = 0; ok && trial < 1000; ++trial)
        (void)entanglement_entropy(cx.set.state(pick(rng)));

      // Canonical encoding injective over the full sets.
      for (const ModeCtx* ctx : {&cx, &rx}) {
        std::unordered_set<std::string> keys;
        for (std::uint32_t i = 0; i < ctx->set.size(); ++i)
          keys.insert(to_hex(ctx->set.key(i)));
        ok = ok && keys.size() == ctx->set.size();
        if (!ok) detail = "encoding injectivity";
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    report(8, "norm preservation, CZ/CNOT equality, involutions, flat spectrum, "
              "injective encoding",
           ok, detail);
  }

  // 9. anchor audit
  {
    std::set<std::string> cx_bad, rx_bad;
    for (const AnchorAudit& a : audit_anchors(cx.set, cx.p, complex_anchors()))
      if (!a.matched) cx_bad.insert(a.anchor.label);
    for (const AnchorAudit& a : audit_anchors(rx.set, rx.p, real_anchors()))
      if (!a.matched) rx_bad.insert(a.anchor.label);
    const bool ok =
        cx_bad == std::set<std::string>{"T14", "X12/34"} &&
        rx_bad == std::set<std::string>{"T14r", "X12/34r", "^V3r", "^V4r"};
    if (ok) {
      std::cerr << "warning: published representatives T14 (duplicates T23), "
                   "X12/34 (duplicates U12/34), and ^V4r (not a unit vector) are "
                   "inconsistent with their rows; all remaining anchors verified"
                << std::endl;
      std::cerr << "warning: the published ^V3r representative has one flipped "
                   "sign and lies in V3r as printed; flipping the |1001> sign "
                   "restores a ^V3r member"
                << std::endl;
    }
    report(9, "anchors verified; exactly the corrupted rows flagged", ok);
  }

  // 10. real -> complex splitting
  {
    std::map<std::string, std::set<std::string>> split;
    bool located = true;
    for (const auto& o : rx.p.orbits) {
      const auto idx = cx.set.find(rx.set.state(o.rep_idx));
      if (!idx) {
        located = false;
        break;
      }
      split[cx.p.orbits[cx.p.orbit_of[*idx]].label].insert(o.label);
    }
    std::map<std::string, std::set<std::string>> expect;
    expect["S0"] = {"S0r"};
    for (Pr p : kPairs) expect["T" + pstr(p)] = {"T" + pstr(p) + "r"};
    for (Pr c : kClasses) expect["U" + xcls(c)] = {"U" + xcls(c) + "r"};
    for (int a = 1; a <= 4; ++a)
      expect["V" + std::to_string(a)] = {"V" + std::to_string(a) + "r",
                                         "^V" + std::to_string(a) + "r"};
    expect["W"] = {"Wr", "^Wr"};
    for (Pr c : kClasses)
      expect["X" + xcls(c)] = {"X" + xcls(c) + "r", "^X" + pstr(c) + "r",
                               "^X" + pstr(pcomp(c)) + "r"};
    report(10, "splitting map: S0/T/U unsplit, V and W split in 2, X split in 3",
           located && split == expect);
  }

  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
