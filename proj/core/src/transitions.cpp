#include "qorbit/transitions.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <sstream>

#include "qorbit/errors.hpp"

namespace qorbit {

TransitionCensus census(const StateSet& set, const OrbitPartition& p,
                        const std::vector<Gate>& gates, int workers) {
  const auto n_orbits = p.orbits.size();
  TransitionCensus result;
  result.gates = gates;
  result.counts.assign(
      n_orbits, std::vector<std::vector<std::int64_t>>(
                    gates.size(), std::vector<std::int64_t>(n_orbits, 0)));

  auto tally = [&](std::size_t lo, std::size_t hi) {
    auto counts = result.counts;  // zero-initialized copy shape
    for (auto& per_gate : counts)
      for (auto& row : per_gate) std::fill(row.begin(), row.end(), 0);
    for (std::size_t i = lo; i < hi; ++i) {
      const auto src = p.orbit_of[i];
      for (std::size_t g = 0; g < gates.size(); ++g) {
        const auto img = set.find(apply_gate(set.state(i), gates[g]));
        if (!img) throw NotClosed("gate image leaves the set");
        ++counts[src][g][p.orbit_of[*img]];
      }
    }
    return counts;
  };

  const int nworkers = std::max(1, std::min<int>(workers, 16));
  if (nworkers == 1 || set.size() < 4096) {
    result.counts = tally(0, set.size());
  } else {
    std::vector<std::future<decltype(result.counts)>> futures;
    const std::size_t chunk = (set.size() + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(set.size(), lo + chunk);
      if (lo >= hi) break;
      futures.push_back(std::async(std::launch::async, tally, lo, hi));
    }
    for (auto& f : futures) {
      const auto part = f.get();
      for (std::size_t o = 0; o < n_orbits; ++o)
        for (std::size_t g = 0; g < gates.size(); ++g)
          for (std::size_t t = 0; t < n_orbits; ++t)
            result.counts[o][g][t] += part[o][g][t];
    }
  }
  return result;
}

bool OrbitGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  return edges.contains({std::min(a, b), std::max(a, b)});
}

std::vector<std::set<int>> OrbitGraph::adjacency() const {
  std::vector<std::set<int>> adj(labels.size());
  for (const auto& [pair, gates] : edges) {
    adj[pair.first].insert(pair.second);
    adj[pair.second].insert(pair.first);
  }
  return adj;
}

OrbitGraph build_graph(const TransitionCensus& c, const OrbitPartition& p) {
  OrbitGraph g;
  for (const auto& orbit : p.orbits) g.labels.push_back(orbit.label);
  g.self_loops.resize(p.orbits.size());
  for (std::size_t src = 0; src < c.counts.size(); ++src) {
    for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
      const Gate& gate = c.gates[gi];
      const std::string pair =
          std::to_string(std::min(gate.q1, gate.q2)) + std::to_string(std::max(gate.q1, gate.q2));
      for (std::size_t dst = 0; dst < c.counts[src][gi].size(); ++dst) {
        if (c.counts[src][gi][dst] == 0) continue;
        if (src == dst) {
          g.self_loops[src].insert(pair);
        } else {
          const int a = static_cast<int>(std::min(src, dst));
          const int b = static_cast<int>(std::max(src, dst));
          g.edges[{a, b}].insert(pair);
        }
      }
    }
  }
  return g;
}

namespace {

std::vector<int> bfs_distances(const std::vector<std::set<int>>& adj, int start) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int next : adj[cur])
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
  }
  return dist;
}

}  // namespace

int diameter(const OrbitGraph& g) {
  const auto adj = g.adjacency();
  int best = 0;
  for (std::size_t start = 0; start < adj.size(); ++start) {
    const auto dist = bfs_distances(adj, static_cast<int>(start));
    for (int d : dist) {
      if (d < 0) throw NotClosed("orbit graph is not connected");
      best = std::max(best, d);
    }
  }
  return best;
}

std::string graph_dot(const OrbitGraph& g) {
  std::ostringstream out;
  out << "graph orbits {\n";
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    out << "  n" << i << " [label=\"" << g.labels[i] << "\"];\n";
  for (const auto& [pair, gates] : g.edges) {
    out << "  n" << pair.first << " -- n" << pair.second << " [label=\"";
    bool first = true;
    for (const auto& gate : gates) {
      if (!first) out << ",";
      out << gate;
      first = false;
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_json(const OrbitGraph& g) {
  std::ostringstream out;
  out << "{\"nodes\":[";
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    out << (i ? "," : "") << "\"" << g.labels[i] << "\"";
  out << "],\"edges\":[";
  bool first = true;
  for (const auto& [pair, gates] : g.edges) {
    if (!first) out << ",";
    out << "{\"a\":\"" << g.labels[pair.first] << "\",\"b\":\"" << g.labels[pair.second]
        << "\",\"pairs\":[";
    bool g_first = true;
    for (const auto& gate : gates) {
      if (!g_first) out << ",";
      out << "\"" << gate << "\"";
      g_first = false;
    }
    out << "]}";
    first = false;
  }
  out << "]}\n";
  return out.str();
}

std::string census_tsv(const TransitionCensus& c, const OrbitPartition& p) {
  std::ostringstream out;
  out << "orbit\tgate\ttarget\tcount\n";
  for (std::size_t src = 0; src < c.counts.size(); ++src)
    for (std::size_t gi = 0; gi < c.gates.size(); ++gi)
      for (std::size_t dst = 0; dst < c.counts[src][gi].size(); ++dst)
        if (c.counts[src][gi][dst] != 0)
          out << p.orbits[src].label << "\t" << to_string(c.gates[gi]) << "\t"
              << p.orbits[dst].label << "\t" << c.counts[src][gi][dst] << "\n";
  return out.str();
}

OrbitNavigator::OrbitNavigator(const StateSet& set, const OrbitPartition& p,
                               const GeneratorSet& locals)
    : set_(set), p_(p), locals_(locals) {
  const auto czs = cz_gates();
  const auto cen = census(set, p, czs);
  graph_ = build_graph(cen, p);

  // Lexicographically-least witness per directed inter-orbit edge, gate ties
  // broken by canonical CZ order.
  for (std::uint32_t rank = 0; rank < set.size(); ++rank) {
    const std::uint32_t i = set.canonical_order()[rank];
    const int src = p.orbit_of[i];
    for (const Gate& gate : czs) {
      const auto img = set.find(apply_gate(set.state(i), gate));
      const int dst = p.orbit_of[*img];
      if (dst == src) continue;
      witnesses_.try_emplace({src, dst}, i, gate);
    }
  }

  // BFS tree over the local generators, rooted at each orbit representative.
  local_tree_.assign(set.size(), {});
  std::deque<std::uint32_t> queue;
  for (const auto& orbit : p.orbits) queue.push_back(orbit.rep_idx);
  std::vector<char> visited(set.size(), 0);
  for (std::uint32_t idx : queue) visited[idx] = 1;
  while (!queue.empty()) {
    const std::uint32_t cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < locals_.gates.size(); ++g) {
      const auto img = set.find(apply_gate(set.state(cur), locals_.gates[g]));
      if (!img) throw NotClosed("local generator image leaves the set");
      if (!visited[*img]) {
        visited[*img] = 1;
        local_tree_[*img] = {static_cast<std::int32_t>(cur), static_cast<std::int16_t>(g)};
        queue.push_back(*img);
      }
    }
  }
}

Circuit OrbitNavigator::local_word(std::uint32_t from, std::uint32_t to) const {
  // Walk both states up to the shared orbit representative.
  auto path_to_rep = [&](std::uint32_t idx) {
    Circuit word;
    std::int32_t cur = static_cast<std::int32_t>(idx);
    while (local_tree_[cur].parent >= 0) {
      word.push_back(locals_.gates[local_tree_[cur].gate]);
      cur = local_tree_[cur].parent;
    }
    std::reverse(word.begin(), word.end());  // rep -> idx
    return word;
  };
  Circuit result = inverse(path_to_rep(from));  // from -> rep
  const Circuit down = path_to_rep(to);         // rep -> to
  result.insert(result.end(), down.begin(), down.end());
  return result;
}

int OrbitNavigator::orbit_distance(const ExactState& a, const ExactState& b) const {
  const auto ia = set_.find(a);
  const auto ib = set_.find(b);
  if (!ia || !ib) throw NotEnumerated("state is not in the enumerated set");
  const auto dist = bfs_distances(graph_.adjacency(), p_.orbit_of[*ia]);
  return dist[p_.orbit_of[*ib]];
}

Circuit OrbitNavigator::connect(const ExactState& a, const ExactState& b) const {
  const auto ia = set_.find(a);
  const auto ib = set_.find(b);
  if (!ia || !ib) throw NotEnumerated("state is not in the enumerated set");
  const int src = p_.orbit_of[*ia];
  const int dst = p_.orbit_of[*ib];

  // Shortest orbit path by BFS with parent tracking.
  const auto adj = graph_.adjacency();
  std::vector<int> parent(adj.size(), -2);
  std::deque<int> queue{src};
  parent[src] = -1;
  while (!queue.empty() && parent[dst] == -2) {
    const int cur = queue.front();
    queue.pop_front();
    for (int next : adj[cur])
      if (parent[next] == -2) {
        parent[next] = cur;
        queue.push_back(next);
      }
  }
  if (parent[dst] == -2) throw NotClosed("orbit graph is not connected");
  std::vector<int> path;
  for (int cur = dst; cur >= 0; cur = parent[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());

  Circuit circuit;
  std::uint32_t cur = *ia;
  for (std::size_t step = 0; step + 1 < path.size(); ++step) {
    const auto& [witness, gate] = witnesses_.at({path[step], path[step + 1]});
    const Circuit walk = local_word(cur, witness);
    circuit.insert(circuit.end(), walk.begin(), walk.end());
    circuit.push_back(gate);
    cur = *set_.find(apply_gate(set_.state(witness), gate));
  }
  const Circuit last = local_word(cur, *ib);
  circuit.insert(circuit.end(), last.begin(), last.end());
  return circuit;
}

}  // namespace qorbit
