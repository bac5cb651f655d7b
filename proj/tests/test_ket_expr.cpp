#include "doctest.h"
#include "qorbit/anchors.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/gates.hpp"
#include "qorbit/ket_expr.hpp"

using namespace qorbit;

TEST_CASE("single kets parse literally as binary") {
  CHECK(parse_ket_expr("|0000>") == basis_state(0));
  CHECK(parse_ket_expr("|0001>") == basis_state(1));
  CHECK(parse_ket_expr("|1000>") == basis_state(8));
  CHECK(parse_ket_expr("|1111>") == basis_state(15));
}

TEST_CASE("bell-type sums parse") {
  const ExactState s = parse_ket_expr("(1/sqrt2)(|1110> - |1101>)");
  CHECK(s.k == 1);
  CHECK(s.amps[14] == GaussianInt{1, 0});
  CHECK(s.amps[13] == GaussianInt{-1, 0});

  // Same state without the shared prefactor.
  CHECK(parse_ket_expr("1/sqrt2|1110> - 1/sqrt2|1101>") == s);
}

TEST_CASE("quarter and eighth coefficients parse") {
  const ExactState u = parse_ket_expr("1/2(|1111> + |1100> - |0011> - |0000>)");
  CHECK(u.k == 2);
  CHECK(u.amps[15] == GaussianInt{1, 0});
  CHECK(u.amps[0] == GaussianInt{-1, 0});

  const ExactState w8 = parse_ket_expr(
      "(1/(2sqrt2))(|1110> + |1101> + |1011> - |1000> + |0111> - |0100> - |0010> - |0001>)");
  CHECK(w8.k == 3);
  CHECK(w8.amps[8] == GaussianInt{-1, 0});
}

TEST_CASE("imaginary coefficients parse") {
  const ExactState s = parse_ket_expr("(1/sqrt2)(|0000> + i|0001>)");
  CHECK(s == apply_gate(apply_gate(zero_state(), make_h(1)), make_p(1)));
  CHECK(parse_ket_expr("i|0000>").amps[0] == GaussianInt{0, 1});
  CHECK(parse_ket_expr("-|0000>").amps[0] == GaussianInt{-1, 0});
}

TEST_CASE("repeated kets accumulate") {
  // 1/2(|0101> + |0101> - ...) from the published table: parses, but the
  // result is not a unit vector.
  CHECK_THROWS_AS(parse_ket_expr("1/2(|0101> + |0101> - |0011> - |0000>)"),
                  NormalizationViolation);
  // Cancellation down to a unit vector is fine.
  CHECK(parse_ket_expr("1/2(|0000> + |0000> + |0011> - |0011>)") == basis_state(0));
}

TEST_CASE("syntax errors are rejected") {
  CHECK_THROWS_AS(parse_ket_expr(""), ParseError);
  CHECK_THROWS_AS(parse_ket_expr("|000>"), ParseError);
  CHECK_THROWS_AS(parse_ket_expr("|00000>"), ParseError);
  CHECK_THROWS_AS(parse_ket_expr("|0000> +"), ParseError);
  CHECK_THROWS_AS(parse_ket_expr("(|0000>"), ParseError);
  CHECK_THROWS_AS(parse_ket_expr("1/3(|0000>)"), ParseError);
  CHECK_THROWS_AS(parse_ket_expr("|0000> |0001>"), ParseError);
}

TEST_CASE("unnormalized sums are rejected") {
  CHECK_THROWS_AS(parse_ket_expr("|0000> + |1111>"), NormalizationViolation);
  CHECK_THROWS_AS(parse_ket_expr("1/2|0000>"), NormalizationViolation);
  CHECK_THROWS_AS(parse_ket_expr("|0000> + 1/sqrt2|0001>"), NormalizationViolation);
}

TEST_CASE("every published representative parses") {
  int malformed = 0;
  for (const auto& anchor : complex_anchors()) {
    CHECK_NOTHROW(parse_ket_expr(anchor.expr));
  }
  for (const auto& anchor : real_anchors()) {
    try {
      parse_ket_expr(anchor.expr);
    } catch (const NormalizationViolation&) {
      ++malformed;  // the ^V4r row as published
      CHECK(anchor.label == "^V4r");
    }
  }
  CHECK(malformed == 1);
}
