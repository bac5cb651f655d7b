#include "qorbit/ket_expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

struct Coeff {
  GaussianInt num{1, 0};
  int sqrt2_exp = 0;  // value = num / sqrt(2)^sqrt2_exp

  Coeff times(const Coeff& other) const {
    return {num * other.num, sqrt2_exp + other.sqrt2_exp};
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExactState parse() {
    skip_ws();
    Coeff global;
    bool global_neg = false;
    if (accept('-')) global_neg = true;
    // Optional global coefficient followed by a parenthesized sum.
    std::size_t mark = pos_;
    if (peek() != '|') {
      Coeff c;
      if (try_coeff(c)) {
        skip_ws();
        if (accept('(')) {
          global = c;
          if (global_neg) global.num = -global.num;
          parse_terms(global, false, ')');
          expect(')');
          skip_ws();
          if (pos_ != text_.size()) throw ParseError("trailing input: " + rest());
          return finish();
        }
        pos_ = mark;  // coefficient belonged to the first term
      } else if (accept('(')) {
        if (global_neg) global.num = -global.num;
        parse_terms(global, false, ')');
        expect(')');
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input: " + rest());
        return finish();
      }
    }
    parse_terms(global, global_neg, '\0');
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input: " + rest());
    return finish();
  }

 private:
  void parse_terms(const Coeff& global, bool first_neg, char stop) {
    bool neg = first_neg;
    for (;;) {
      skip_ws();
      if (!neg && accept('-')) neg = true;
      Coeff c;
      try_coeff(c);
      skip_ws();
      int b = parse_ket();
      Coeff total = global.times(c);
      if (neg) total.num = -total.num;
      terms_.push_back({b, total});
      skip_ws();
      if (accept('+')) {
        neg = false;
      } else if (accept('-')) {
        neg = true;
      } else {
        if (stop == ')' && peek() != ')')
          throw ParseError("expected '+', '-' or ')' at: " + rest());
        return;
      }
    }
  }

  ExactState finish() {
    if (terms_.empty()) throw ParseError("empty expression");
    int k = 0;
    for (const auto& [b, c] : terms_) k = std::max(k, c.sqrt2_exp);
    for (int attempt = 0; attempt < 2; ++attempt) {
      bool ok = true;
      for (const auto& [b, c] : terms_)
        if ((k - c.sqrt2_exp) % 2 != 0) ok = false;
      if (ok) break;
      ++k;
      if (attempt == 1)
        throw NormalizationViolation("amplitudes mix incompatible sqrt2 scales");
    }
    ExactState raw;
    raw.k = k;
    for (const auto& [b, c] : terms_) {
      const std::int32_t scale = 1 << ((k - c.sqrt2_exp) / 2);
      raw.amps[b] = raw.amps[b] + GaussianInt{c.num.re * scale, c.num.im * scale};
    }
    return canonicalize(raw);
  }

  int parse_ket() {
    expect('|');
    int b = 0;
    int bits = 0;
    while (peek() == '0' || peek() == '1') {
      b = (b << 1) | (text_[pos_++] - '0');
      ++bits;
    }
    if (bits != 4) throw ParseError("ket needs exactly 4 bits");
    expect('>');
    return b;
  }

  // Recognizes one coefficient literal, optionally parenthesized.
  bool try_coeff(Coeff& out) {
    skip_ws();
    std::size_t start = pos_;
    bool parens = accept('(');
    skip_ws();
    GaussianInt unit{1, 0};
    if (accept('i')) unit = {0, 1};
    else if (!accept('1')) {
      pos_ = start;
      return false;
    }
    int exp = 0;
    skip_ws();
    if (accept('/')) {
      skip_ws();
      if (accept('2')) {
        exp = 2;
      } else if (match("sqrt2")) {
        exp = 1;
      } else if (accept('(')) {
        skip_ws();
        if (!accept('2') || !(skip_ws(), match("sqrt2")))
          throw ParseError("bad coefficient denominator at: " + rest());
        skip_ws();
        expect(')');
        exp = 3;
      } else {
        throw ParseError("bad coefficient denominator at: " + rest());
      }
    }
    if (parens) {
      skip_ws();
      if (!accept(')')) {
        pos_ = start;
        return false;
      }
    }
    // A bare "1"/"i" directly before a digit would eat a ket bit; there is
    // no such ambiguity because kets always start with '|'.
    out = {unit, exp};
    return true;
  }

  bool match(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' at: " + rest());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string rest() const { return std::string(text_.substr(pos_)); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<int, Coeff>> terms_;
};

}  // namespace

ExactState parse_ket_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace qorbit
