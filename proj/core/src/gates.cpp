#include "qorbit/gates.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

void check_qubit(int q) {
  if (q < 1 || q > 4) throw ParseError("qubit index out of range 1..4");
}

// Qubit q addresses bit 2^(q-1) of the basis index.
int qmask(int q) { return 1 << (q - 1); }

}  // namespace

Gate make_h(int q) {
  check_qubit(q);
  return {GateKind::H, q, 0};
}

Gate make_p(int q) {
  check_qubit(q);
  return {GateKind::P, q, 0};
}

Gate make_z(int q) {
  check_qubit(q);
  return {GateKind::Z, q, 0};
}

Gate make_x(int q) {
  check_qubit(q);
  return {GateKind::X, q, 0};
}

Gate make_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw ParseError("CNOT control equals target");
  return {GateKind::CNOT, control, target};
}

Gate make_cz(int a, int b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw ParseError("CZ needs two distinct qubits");
  return {GateKind::CZ, std::min(a, b), std::max(a, b)};
}

int cnot_count(const Circuit& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](const Gate& g) {
    return g.kind == GateKind::CNOT || g.kind == GateKind::CZ;
  }));
}

Circuit inverse(const Circuit& c) {
  Circuit inv;
  inv.reserve(c.size() + 2);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (it->kind == GateKind::P) {
      inv.push_back(*it);
      inv.push_back(*it);
      inv.push_back(*it);
    } else {
      inv.push_back(*it);
    }
  }
  return inv;
}

GeneratorSet generator_set(GeneratorSetName name) {
  GeneratorSet set{name, {}};
  for (int q = 1; q <= 4; ++q) set.gates.push_back(make_h(q));
  const bool real = name == GeneratorSetName::LOCAL_R || name == GeneratorSetName::FULL_R;
  for (int q = 1; q <= 4; ++q)
    set.gates.push_back(real ? make_z(q) : make_p(q));
  if (name == GeneratorSetName::FULL_C || name == GeneratorSetName::FULL_R) {
    for (int c = 1; c <= 4; ++c)
      for (int t = 1; t <= 4; ++t)
        if (c != t) set.gates.push_back(make_cnot(c, t));
  }
  return set;
}

std::string generator_set_name(GeneratorSetName name) {
  switch (name) {
    case GeneratorSetName::LOCAL_C: return "LOCAL_C";
    case GeneratorSetName::LOCAL_R: return "LOCAL_R";
    case GeneratorSetName::FULL_C: return "FULL_C";
    case GeneratorSetName::FULL_R: return "FULL_R";
  }
  throw InternalError("bad generator set name");
}

GeneratorSetName generator_set_from_name(std::string_view name) {
  if (name == "LOCAL_C") return GeneratorSetName::LOCAL_C;
  if (name == "LOCAL_R") return GeneratorSetName::LOCAL_R;
  if (name == "FULL_C") return GeneratorSetName::FULL_C;
  if (name == "FULL_R") return GeneratorSetName::FULL_R;
  throw DecodeError("unknown generator set: " + std::string(name));
}

std::vector<Gate> cz_gates() {
  std::vector<Gate> gates;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) gates.push_back(make_cz(a, b));
  return gates;
}

std::vector<Gate> cnot_gates() {
  std::vector<Gate> gates;
  for (int c = 1; c <= 4; ++c)
    for (int t = 1; t <= 4; ++t)
      if (c != t) gates.push_back(make_cnot(c, t));
  return gates;
}

ExactState apply_gate(const ExactState& s, const Gate& g) {
  ExactState out = s;
  switch (g.kind) {
    case GateKind::H: {
      const int m = qmask(g.q1);
      for (int b = 0; b < 16; ++b) {
        if (b & m) continue;
        const GaussianInt z0 = out.amps[b];
        const GaussianInt z1 = out.amps[b | m];
        out.amps[b] = z0 + z1;
        out.amps[b | m] = z0 - z1;
      }
      out.k += 1;
      return canonicalize(out);
    }
    case GateKind::P: {
      const int m = qmask(g.q1);
      for (int b = 0; b < 16; ++b)
        if (b & m) out.amps[b] = out.amps[b].times_i();
      return out;
    }
    case GateKind::Z: {
      const int m = qmask(g.q1);
      for (int b = 0; b < 16; ++b)
        if (b & m) out.amps[b] = -out.amps[b];
      return out;
    }
    case GateKind::X: {
      const int m = qmask(g.q1);
      for (int b = 0; b < 16; ++b)
        if (!(b & m)) std::swap(out.amps[b], out.amps[b | m]);
      return out;
    }
    case GateKind::CNOT: {
      const int mc = qmask(g.q1);
      const int mt = qmask(g.q2);
      for (int b = 0; b < 16; ++b)
        if ((b & mc) && !(b & mt)) std::swap(out.amps[b], out.amps[b | mt]);
      return out;
    }
    case GateKind::CZ: {
      const int m = qmask(g.q1) | qmask(g.q2);
      for (int b = 0; b < 16; ++b)
        if ((b & m) == m) out.amps[b] = -out.amps[b];
      return out;
    }
  }
  throw InternalError("bad gate kind");
}

ExactState apply_circuit(const ExactState& s, const Circuit& c) {
  ExactState out = s;
  for (const Gate& g : c) out = apply_gate(out, g);
  return out;
}

std::string to_string(const Gate& g) {
  std::ostringstream out;
  switch (g.kind) {
    case GateKind::H: out << "H" << g.q1; break;
    case GateKind::P: out << "P" << g.q1; break;
    case GateKind::Z: out << "Z" << g.q1; break;
    case GateKind::X: out << "X" << g.q1; break;
    case GateKind::CNOT: out << "CNOT(" << g.q1 << "," << g.q2 << ")"; break;
    case GateKind::CZ: out << "CZ(" << g.q1 << "," << g.q2 << ")"; break;
  }
  return out.str();
}

std::string to_string(const Circuit& c) {
  std::string text;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) text += ",";
    text += to_string(c[i]);
  }
  return text;
}

Gate parse_gate(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.size() == 2 && trimmed[1] >= '1' && trimmed[1] <= '4') {
    const int q = trimmed[1] - '0';
    switch (trimmed[0]) {
      case 'H': return make_h(q);
      case 'P': return make_p(q);
      case 'Z': return make_z(q);
      case 'X': return make_x(q);
      default: break;
    }
  }
  auto pair_form = [&](std::string_view prefix) -> std::pair<int, int> {
    // prefix(a,b)
    if (trimmed.size() != prefix.size() + 5 || trimmed.substr(0, prefix.size()) != prefix ||
        trimmed[prefix.size()] != '(' || trimmed[prefix.size() + 2] != ',' ||
        trimmed[prefix.size() + 4] != ')')
      throw ParseError("bad gate token: " + std::string(text));
    return {trimmed[prefix.size() + 1] - '0', trimmed[prefix.size() + 3] - '0'};
  };
  if (trimmed.rfind("CNOT", 0) == 0) {
    auto [c, t] = pair_form("CNOT");
    return make_cnot(c, t);
  }
  if (trimmed.rfind("CZ", 0) == 0) {
    auto [a, b] = pair_form("CZ");
    return make_cz(a, b);
  }
  throw ParseError("bad gate token: " + std::string(text));
}

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    // Commas inside CNOT(..)/CZ(..) are not separators.
    std::size_t open = text.find('(', pos);
    if (open != std::string_view::npos && comma != std::string_view::npos && open < comma) {
      std::size_t close = text.find(')', open);
      if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis");
      comma = text.find(',', close);
    }
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (!token.empty()) circuit.push_back(parse_gate(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return circuit;
}

}  // namespace qorbit
