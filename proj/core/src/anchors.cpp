#include "qorbit/anchors.hpp"

#include "qorbit/errors.hpp"
#include "qorbit/ket_expr.hpp"

namespace qorbit {

namespace {

// Complex-label rows of the published representative table, verbatim.
// Known defects, reported by the audit rather than patched here: the T14 row
// repeats the T23 state, and the X12/34 row repeats the U12/34 state.
const std::vector<Anchor> kComplexAnchors = {
    {"S0", "|0000>"},
    {"T12", "(1/sqrt2)(|1110> - |1101>)"},
    {"T13", "(1/sqrt2)(|1110> - |1011>)"},
    {"T14", "(1/sqrt2)(|1101> - |1011>)"},
    {"T23", "(1/sqrt2)(|1101> - |1011>)"},
    {"T24", "(1/sqrt2)(|1101> - |0111>)"},
    {"T34", "(1/sqrt2)(|1011> - |0111>)"},
    {"U12/34", "(1/2)(|1111> + |1100> - |0011> - |0000>)"},
    {"U13/24", "(1/2)(|1111> + |1010> - |0101> - |0000>)"},
    {"U14/23", "(1/2)(|1111> + |1001> - |0110> - |0000>)"},
    {"V1", "(1/sqrt2)(|1001> - |0111>)"},
    {"V2", "(1/sqrt2)(|1010> - |0111>)"},
    {"V3", "(1/sqrt2)(|1100> - |0111>)"},
    {"V4", "(1/sqrt2)(|1100> - |1011>)"},
    {"W", "(1/sqrt2)(|1000> - |0111>)"},
    {"X12/34", "(1/2)(|1111> + |1100> - |0011> - |0000>)"},
    {"X13/24", "(1/2)(|1111> - |1010> - |0101> - |0000>)"},
    {"X14/23", "(1/2)(|1111> - |1001> - |0110> - |0000>)"},
};

// Real-label rows. The ^V4r row is corrupted as published: it repeats a ket
// and is not normalized.
const std::vector<Anchor> kRealAnchors = {
    {"S0r", "|0000>"},
    {"T12r", "(1/sqrt2)(|1110> - |1101>)"},
    {"T13r", "(1/sqrt2)(|1110> - |1011>)"},
    {"T14r", "(1/sqrt2)(|1101> - |1011>)"},
    {"T23r", "(1/sqrt2)(|1101> - |1011>)"},
    {"T24r", "(1/sqrt2)(|1101> - |0111>)"},
    {"T34r", "(1/sqrt2)(|1011> - |0111>)"},
    {"U12/34r", "(1/2)(|1111> + |1100> - |0011> - |0000>)"},
    {"U13/24r", "(1/2)(|1111> + |1010> - |0101> - |0000>)"},
    {"U14/23r", "(1/2)(|1111> + |1001> - |0110> - |0000>)"},
    {"V1r", "(1/sqrt2)(|1001> - |0111>)"},
    {"V2r", "(1/sqrt2)(|1010> - |0111>)"},
    {"V3r", "(1/sqrt2)(|1100> - |0111>)"},
    {"V4r", "(1/sqrt2)(|1100> - |1011>)"},
    {"^V1r", "(1/2)(|1100> - |1010> - |0110> - |0000>)"},
    {"^V2r", "(1/2)(|1100> - |1001> - |0101> - |0000>)"},
    {"^V3r", "(1/2)(|1010> + |1001> - |0011> - |0000>)"},
    {"^V4r", "(1/2)(|0101> + |0101> - |0011> - |0000>)"},
    {"Wr", "(1/sqrt2)(|1000> - |0111>)"},
    {"^Wr",
     "(1/(2sqrt2))(|1110> + |1101> + |1011> - |1000> + |0111> - |0100> - |0010> - |0001>)"},
    {"X12/34r", "(1/2)(|1111> + |1100> - |0011> - |0000>)"},
    {"X13/24r", "(1/2)(|1111> - |1010> - |0101> - |0000>)"},
    {"X14/23r", "(1/2)(|1111> - |1001> - |0110> - |0000>)"},
    {"^X12r", "(1/2)(|1100> - |1011> - |0111> - |0000>)"},
    {"^X34r", "(1/2)(|1110> - |1101> - |0011> - |0000>)"},
    {"^X24r", "(1/2)(|1110> - |1011> - |0101> - |0000>)"},
    {"^X14r", "(1/2)(|1101> - |1011> - |0110> - |0000>)"},
    {"^X13r", "(1/2)(|1101> - |1010> - |0111> - |0000>)"},
    {"^X23r", "(1/2)(|1110> - |1001> - |0111> - |0000>)"},
};

}  // namespace

const std::vector<Anchor>& complex_anchors() { return kComplexAnchors; }
const std::vector<Anchor>& real_anchors() { return kRealAnchors; }

std::vector<AnchorAudit> audit_anchors(const StateSet& set, const OrbitPartition& p,
                                       const std::vector<Anchor>& anchors) {
  std::vector<AnchorAudit> audits;
  audits.reserve(anchors.size());
  for (const Anchor& anchor : anchors) {
    AnchorAudit audit{anchor};
    try {
      const ExactState s = parse_ket_expr(anchor.expr);
      audit.parsed = true;
      const auto idx = set.find(s);
      if (!idx) {
        audit.note = "state not in the enumerated set";
      } else {
        audit.found_label = p.orbits[p.orbit_of[*idx]].label;
        audit.matched = audit.found_label == anchor.label;
        if (!audit.matched)
          audit.note = "anchor lies in orbit " + audit.found_label;
      }
    } catch (const NormalizationViolation& e) {
      audit.note = std::string("not a unit vector: ") + e.what();
    } catch (const ParseError& e) {
      audit.note = std::string("parse error: ") + e.what();
    }
    audits.push_back(std::move(audit));
  }
  return audits;
}

}  // namespace qorbit
