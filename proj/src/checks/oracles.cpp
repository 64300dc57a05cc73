#include "checks/oracles.hpp"

#include "assocform/errors.hpp"
#include "assocform/matrix.hpp"

namespace assocform::checks {

HomogeneousForm power_of_linear(Ring ring, const std::vector<Rat>& coeffs, int m) {
  const int n = static_cast<int>(coeffs.size());
  TermMap terms;
  for (int i = 0; i < n; ++i) {
    if (sgn(coeffs[static_cast<std::size_t>(i)]) == 0) continue;
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    terms[std::move(e)] = coeffs[static_cast<std::size_t>(i)];
  }
  return HomogeneousForm::from_terms(ring, n, 1, std::move(terms)).pow(m);
}

HomogeneousForm polar_apply_by_derivatives(const HomogeneousForm& g,
                                           const HomogeneousForm& F) {
  const int result_degree = F.degree() >= g.degree() ? F.degree() - g.degree() : 0;
  HomogeneousForm out(Ring::D, F.var_count(), result_degree);
  if (F.degree() < g.degree()) return out;
  for (const auto& [alpha, c] : g.terms()) {
    HomogeneousForm image = F;
    for (int i = 0; i < F.var_count(); ++i)
      for (int k = 0; k < alpha[static_cast<std::size_t>(i)]; ++k)
        image = image.derivative(i);
    out = out + image.scaled(c);
  }
  return out;
}

Rat binary_resultant(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.var_count() != 2 || b.var_count() != 2)
    throw StructuralError("structural_error", "binary forms required");
  if (a.is_zero() || b.is_zero())
    throw StructuralError("structural_error", "resultant of the zero form");
  const int p = a.degree();
  const int q = b.degree();
  std::vector<Rat> ca(static_cast<std::size_t>(p + 1));
  std::vector<Rat> cb(static_cast<std::size_t>(q + 1));
  for (const auto& [e, c] : a.terms()) ca[static_cast<std::size_t>(e[1])] = c;
  for (const auto& [e, c] : b.terms()) cb[static_cast<std::size_t>(e[1])] = c;

  Mat sylvester(p + q, p + q);
  for (int r = 0; r < q; ++r)
    for (int i = 0; i <= p; ++i) sylvester.at(r, r + i) = ca[static_cast<std::size_t>(i)];
  for (int r = 0; r < p; ++r)
    for (int i = 0; i <= q; ++i)
      sylvester.at(q + r, r + i) = cb[static_cast<std::size_t>(i)];
  return determinant(sylvester);
}

namespace {

bool all_weights_positive(const HomogeneousForm& f, const std::vector<long long>& w) {
  for (const auto& [e, c] : f.terms()) {
    long long total = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      total += static_cast<long long>(e[i]) * w[i];
    if (total <= 0) return false;
  }
  return true;
}

bool search_weights(const HomogeneousForm& f, long long bound,
                    std::vector<long long>& w, std::size_t pos, long long partial_sum) {
  const std::size_t n = w.size();
  if (pos + 1 == n) {
    w[pos] = -partial_sum;
    if (w[pos] < -bound || w[pos] > bound) return false;
    bool trivial = true;
    for (long long v : w) trivial = trivial && v == 0;
    if (trivial) return false;
    return all_weights_positive(f, w);
  }
  for (long long v = -bound; v <= bound; ++v) {
    w[pos] = v;
    if (search_weights(f, bound, w, pos + 1, partial_sum + v)) return true;
  }
  return false;
}

}  // namespace

bool brute_force_destabilizer(const HomogeneousForm& f, long long bound) {
  std::vector<long long> w(static_cast<std::size_t>(f.var_count()), 0);
  return search_weights(f, bound, w, 0, 0);
}

int catalecticant_rank(const HomogeneousForm& f, int order) {
  const int n = f.var_count();
  const MonomialBasis operators(n, order);
  const MonomialBasis target(n, f.degree() - order);
  Mat rows(0, target.size());
  for (int i = 0; i < operators.size(); ++i) {
    HomogeneousForm image = f;
    const Exponents& alpha = operators.at(i);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < alpha[static_cast<std::size_t>(v)]; ++k)
        image = image.derivative(v);
    rows.append_row(coordinates(image, target));
  }
  return rank_of(rows);
}

}  // namespace assocform::checks
