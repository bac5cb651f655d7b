#pragma once

#include <string>
#include <vector>

#include "qorbit/closure.hpp"
#include "qorbit/orbits.hpp"

namespace qorbit {

// Published representative state for one orbit label.
struct Anchor {
  std::string label;  // artifact label, e.g. "T12", "^V4r"
  std::string expr;   // ket-sum expression as published
};

// The published per-orbit representatives. Three of the real/complex entries
// are known to be corrupted in the source (see audit_anchors).
const std::vector<Anchor>& complex_anchors();
const std::vector<Anchor>& real_anchors();

struct AnchorAudit {
  Anchor anchor;
  bool parsed = false;
  bool matched = false;      // orbit label of the parsed state == anchor label
  std::string found_label;   // label of the orbit actually containing it
  std::string note;          // parse/normalization diagnostics
};

// Locates every anchor in the labeled partition and compares labels.
// Mismatches and malformed anchors are reported, not thrown.
std::vector<AnchorAudit> audit_anchors(const StateSet& set, const OrbitPartition& p,
                                       const std::vector<Anchor>& anchors);

}  // namespace qorbit
