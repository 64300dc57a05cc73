#include "assocform/monomial.hpp"

#include <algorithm>

#include "assocform/errors.hpp"
#include "assocform/rational.hpp"

namespace assocform {

int exponent_sum(const Exponents& e) {
  int total = 0;
  for (int v : e) total += v;
  return total;
}

Int factorial_product(const Exponents& e) {
  Int out = 1;
  for (int v : e) out *= factorial(v);
  return out;
}

bool grevlex_greater(const Exponents& a, const Exponents& b) {
  int da = exponent_sum(a);
  int db = exponent_sum(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void enumerate(int n, int remaining, Exponents& current,
               std::vector<Exponents>& out) {
  if (static_cast<int>(current.size()) == n - 1) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.push_back(e);
    enumerate(n, remaining - e, current, out);
    current.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1 || degree < 0)
    throw StructuralError("structural_error", "invalid graded piece parameters");
  Exponents scratch;
  scratch.reserve(static_cast<std::size_t>(n));
  enumerate(n, degree, scratch, exponents_);
  std::sort(exponents_.begin(), exponents_.end(), GrevlexGreater{});
  for (int i = 0; i < size(); ++i) index_[exponents_[static_cast<std::size_t>(i)]] = i;
}

int MonomialBasis::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end())
    throw StructuralError("structural_error", "monomial not in graded piece");
  return it->second;
}

int MonomialBasis::dimension(int n, int degree) {
  return static_cast<int>(binomial(degree + n - 1, n - 1).get_si());
}

}  // namespace assocform
