#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qorbit/closure.hpp"
#include "qorbit/gates.hpp"
#include "qorbit/orbits.hpp"

namespace qorbit {

// For each (source orbit, gate): how many source elements land in each
// target orbit. Row sums equal the source orbit size.
struct TransitionCensus {
  std::vector<Gate> gates;
  // counts[orbit][gate index][target orbit]
  std::vector<std::vector<std::vector<std::int64_t>>> counts;
};

TransitionCensus census(const StateSet& set, const OrbitPartition& p,
                        const std::vector<Gate>& gates, int workers = 1);

// Orbit connectivity under the entangling gates: an edge joins two distinct
// orbits when some census count between them is positive. Self-loops are
// recorded separately and never contribute to path lengths.
struct OrbitGraph {
  std::vector<std::string> labels;
  // adjacency[a][b] = set of CZ pair names ("12", ...) realizing the edge.
  std::map<std::pair<int, int>, std::set<std::string>> edges;  // a < b
  std::vector<std::set<std::string>> self_loops;

  bool has_edge(int a, int b) const;
  std::vector<std::set<int>> adjacency() const;
};

OrbitGraph build_graph(const TransitionCensus& c, const OrbitPartition& p);

// Max over node pairs of the shortest-path length. Throws Disconnected
// (as NotClosed) if the graph is not connected.
int diameter(const OrbitGraph& g);

std::string graph_dot(const OrbitGraph& g);
std::string graph_json(const OrbitGraph& g);
// TSV rows (orbit, gate, target orbit, count), sorted canonically.
std::string census_tsv(const TransitionCensus& c, const OrbitPartition& p);

// Precomputed indices for state-to-state circuit synthesis: the orbit graph
// over the CZ pairs, one lexicographically-least witness per directed
// inter-orbit edge, and a per-orbit BFS tree over the local generators.
class OrbitNavigator {
 public:
  OrbitNavigator(const StateSet& set, const OrbitPartition& p,
                 const GeneratorSet& locals);

  // Circuit over {locals + CZ} with apply_circuit(a, circuit) == b exactly
  // (global phase included) and cnot_count == orbit-graph distance.
  Circuit connect(const ExactState& a, const ExactState& b) const;

  const OrbitGraph& graph() const { return graph_; }
  int orbit_distance(const ExactState& a, const ExactState& b) const;

 private:
  Circuit local_word(std::uint32_t from, std::uint32_t to) const;

  const StateSet& set_;
  const OrbitPartition& p_;
  GeneratorSet locals_;
  OrbitGraph graph_;
  // Per directed orbit pair (a -> b): witness state index and CZ gate.
  std::map<std::pair<int, int>, std::pair<std::uint32_t, Gate>> witnesses_;
  // BFS tree over local generators, rooted at each orbit representative.
  struct LocalEdge {
    std::int32_t parent = -1;
    std::int16_t gate = -1;
  };
  std::vector<LocalEdge> local_tree_;
};

}  // namespace qorbit
