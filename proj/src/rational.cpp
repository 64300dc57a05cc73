#include "assocform/rational.hpp"

#include <cctype>

#include "assocform/errors.hpp"

namespace assocform {

Int factorial(int k) {
  Int out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

Int binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

Rat rat_from_string(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw ParseError("malformed rational '" + text + "'");
  bool slash_seen = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash_seen || i == start || i + 1 == s.size())
        throw ParseError("malformed rational '" + text + "'");
      slash_seen = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("malformed rational '" + text + "'");
    }
  }
  Rat value;
  if (mpq_set_str(value.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("malformed rational '" + text + "'");
  if (value.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Rat make_primitive(std::vector<Rat>& values) {
  Int den_lcm = 1;
  for (const Rat& v : values) {
    if (sgn(v) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  Int num_gcd = 0;
  for (const Rat& v : values) {
    if (sgn(v) == 0) continue;
    Int scaled_num = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  if (num_gcd == 0) return Rat(1);  // zero vector
  Rat multiplier(den_lcm, num_gcd);
  multiplier.canonicalize();
  for (Rat& v : values) {
    v *= multiplier;
    v.canonicalize();
  }
  return multiplier;
}

}  // namespace assocform
