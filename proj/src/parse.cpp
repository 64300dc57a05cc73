#include "assocform/parse.hpp"

#include <cctype>
#include <sstream>

#include "assocform/errors.hpp"

namespace assocform {

namespace {

struct Cursor {
  std::string text;  // whitespace stripped
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() { return text[pos++]; }
};

std::string read_unsigned_integer(Cursor& c) {
  std::string digits;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
    digits += c.take();
  return digits;
}

// [int][/int] following an optional sign already consumed by the caller.
Rat read_coefficient(Cursor& c) {
  std::string num = read_unsigned_integer(c);
  if (num.empty()) throw ParseError("expected a number at position " + std::to_string(c.pos));
  std::string literal = num;
  if (!c.done() && c.peek() == '/') {
    c.take();
    std::string den = read_unsigned_integer(c);
    if (den.empty())
      throw ParseError("expected a denominator at position " + std::to_string(c.pos));
    literal += "/" + den;
  }
  return rat_from_string(literal);
}

struct ParsedTerm {
  Rat coefficient;
  Exponents exponents;
  std::optional<Ring> ring;  // absent for constant terms
  std::string source;
};

ParsedTerm read_term(Cursor& c, int n) {
  ParsedTerm term;
  term.coefficient = 1;
  term.exponents.assign(static_cast<std::size_t>(n), 0);
  const std::size_t start = c.pos;

  bool saw_factor = false;
  bool expect_factor = true;
  while (!c.done() && expect_factor) {
    const char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      term.coefficient *= read_coefficient(c);
      saw_factor = true;
    } else if (ch == 'x' || ch == 'z') {
      c.take();
      const Ring ring = (ch == 'x') ? Ring::S : Ring::D;
      if (term.ring && *term.ring != ring)
        throw ParseError("mixed variable letters in one term");
      term.ring = ring;
      const std::string index_digits = read_unsigned_integer(c);
      if (index_digits.empty())
        throw ParseError(std::string("missing variable index after '") + ch + "'");
      const int index = std::stoi(index_digits);
      if (index < 1 || index > n)
        throw ParseError("unknown variable " + std::string(1, ch) + index_digits +
                         " (n=" + std::to_string(n) + ")");
      int exponent = 1;
      if (!c.done() && c.peek() == '^') {
        c.take();
        const std::string exp_digits = read_unsigned_integer(c);
        if (exp_digits.empty()) throw ParseError("missing exponent after '^'");
        exponent = std::stoi(exp_digits);
      }
      term.exponents[static_cast<std::size_t>(index - 1)] += exponent;
      saw_factor = true;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' at position " +
                       std::to_string(c.pos));
    }
    expect_factor = false;
    if (!c.done() && c.peek() == '*') {
      c.take();
      expect_factor = true;
    }
  }
  if (expect_factor && !saw_factor) throw ParseError("empty term");
  if (expect_factor) throw ParseError("dangling '*' at position " + std::to_string(c.pos));
  term.source = c.text.substr(start, c.pos - start);
  return term;
}

}  // namespace

HomogeneousForm parse_form(const std::string& text, int n, std::optional<Ring> expected) {
  if (n < 1) throw StructuralError("structural_error", "variable count must be >= 1");
  Cursor c;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) c.text += ch;
  if (c.text.empty()) throw ParseError("empty form text");

  std::vector<ParsedTerm> parsed;
  bool first = true;
  while (!c.done()) {
    Rat sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.take() == '-') sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(c.pos));
    }
    ParsedTerm term = read_term(c, n);
    term.coefficient *= sign;
    parsed.push_back(std::move(term));
    first = false;
  }

  std::optional<Ring> ring = expected;
  for (const ParsedTerm& t : parsed) {
    if (!t.ring) continue;
    if (expected && *t.ring != *expected)
      throw ParseError("variable letter does not match the expected ring");
    if (ring && !expected && *ring != *t.ring)
      throw ParseError("mixed variable letters in one form");
    ring = t.ring;
  }
  if (!ring) ring = Ring::S;

  std::optional<int> degree;
  for (const ParsedTerm& t : parsed) {
    if (sgn(t.coefficient) == 0) continue;
    const int d = exponent_sum(t.exponents);
    if (!degree) degree = d;
    if (*degree != d)
      throw ParseError("inhomogeneous input: term '" + t.source + "' has degree " +
                       std::to_string(d) + ", expected " + std::to_string(*degree));
  }
  if (!degree) degree = 0;  // all terms vanished: the zero form

  TermMap terms;
  for (const ParsedTerm& t : parsed) {
    if (sgn(t.coefficient) == 0) continue;
    auto [it, inserted] = terms.emplace(t.exponents, t.coefficient);
    if (!inserted) {
      it->second += t.coefficient;
      if (sgn(it->second) == 0) terms.erase(it);
    }
  }
  return HomogeneousForm::from_terms(*ring, n, *degree, std::move(terms));
}

std::string format_form(const HomogeneousForm& f) {
  if (f.is_zero()) return "0";
  const char letter = ring_variable_letter(f.ring());
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    Rat mag = negative ? Rat(-c) : c;
    const bool constant_term = exponent_sum(e) == 0;
    const bool show_coefficient = constant_term || mag != 1;
    if (show_coefficient) out << rat_to_string(mag);
    bool shown_factor = show_coefficient;
    for (int i = 0; i < f.var_count(); ++i) {
      const int exp = e[static_cast<std::size_t>(i)];
      if (exp == 0) continue;
      if (shown_factor) out << '*';
      out << letter << (i + 1);
      if (exp > 1) out << '^' << exp;
      shown_factor = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace assocform
