#include "assocform/geometry.hpp"

#include <algorithm>
#include <utility>

#include "assocform/artinian.hpp"
#include "assocform/errors.hpp"

namespace assocform {

ProjectivePoint::ProjectivePoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
  if (coords_.empty())
    throw StructuralError("structural_error", "empty point");
  int first_nonzero = -1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) {
      first_nonzero = static_cast<int>(i);
      break;
    }
  }
  if (first_nonzero < 0)
    throw StructuralError("structural_error", "projective point must be nonzero");
  const Rat scale = coords_[static_cast<std::size_t>(first_nonzero)];
  for (Rat& c : coords_) c /= scale;
}

HomogeneousForm ProjectivePoint::dual_linear_form(Ring ring) const {
  const int n = var_count();
  TermMap terms;
  for (int i = 0; i < n; ++i) {
    if (sgn(coords_[static_cast<std::size_t>(i)]) == 0) continue;
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    terms[std::move(e)] = coords_[static_cast<std::size_t>(i)];
  }
  return HomogeneousForm::from_terms(ring, n, 1, std::move(terms));
}

namespace {

bool all_vanish_at(const std::vector<HomogeneousForm>& forms,
                   const std::vector<Rat>& point) {
  for (const HomogeneousForm& f : forms)
    if (sgn(f.evaluate(point)) != 0) return false;
  return true;
}

}  // namespace

namespace {

HomogeneousForm iterated_derivative(const HomogeneousForm& f, const Exponents& orders) {
  HomogeneousForm out = f;
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (int k = 0; k < orders[i]; ++k) out = out.derivative(static_cast<int>(i));
  return out;
}

}  // namespace

int multiplicity_at(const HomogeneousForm& f, const ProjectivePoint& p) {
  if (f.is_zero())
    throw StructuralError("structural_error", "multiplicity of the zero form");
  if (f.var_count() != p.var_count())
    throw StructuralError("structural_error", "variable count mismatch");
  if (sgn(f.evaluate(p.coords())) != 0) return 0;

  for (int order = 1; order <= f.degree(); ++order) {
    const MonomialBasis indices(f.var_count(), order);
    for (int i = 0; i < indices.size(); ++i)
      if (sgn(iterated_derivative(f, indices.at(i)).evaluate(p.coords())) != 0)
        return order;
  }
  throw std::logic_error("nonzero form with all partial derivatives vanishing");
}

std::pair<bool, bool> veronese_membership_pattern(
    const std::vector<HomogeneousForm>& generators, int socle_degree,
    const ProjectivePoint& p, int ell) {
  if (generators.empty())
    throw StructuralError("structural_error", "empty generator list");
  const int n = generators.front().var_count();
  if (ell < 0 || ell >= socle_degree)
    throw StructuralError("structural_error", "order out of range");
  const IdealSlice top = ideal_piece(generators, socle_degree, n);
  if (top.quotient_dim != 1)
    throw DomainError("not_gorenstein",
                      "socle certificate failed at degree " + std::to_string(socle_degree));

  const HomogeneousForm dual = p.dual_linear_form(Ring::S);
  const HomogeneousForm upper_power = dual.pow(socle_degree - ell);
  const bool upper =
      ideal_piece(generators, socle_degree - ell, n).piece.contains(upper_power);
  bool lower = false;
  if (socle_degree - ell - 1 >= 1) {
    const HomogeneousForm lower_power = dual.pow(socle_degree - ell - 1);
    lower =
        ideal_piece(generators, socle_degree - ell - 1, n).piece.contains(lower_power);
  }
  return {upper, lower};
}

Mat hessian_at(const HomogeneousForm& f, const ProjectivePoint& p) {
  const int n = f.var_count();
  Mat h(n, n);
  for (int i = 0; i < n; ++i) {
    const HomogeneousForm di = f.derivative(i);
    for (int j = i; j < n; ++j) {
      h.at(i, j) = di.derivative(j).evaluate(p.coords());
      h.at(j, i) = h.at(i, j);
    }
  }
  return h;
}

bool is_ordinary_double_point(const HomogeneousForm& f, const ProjectivePoint& p) {
  if (multiplicity_at(f, p) != 2) return false;
  return rank_of(hessian_at(f, p)) == f.var_count() - 1;
}

bool general_linear_position(const std::vector<ProjectivePoint>& points) {
  if (points.empty())
    throw StructuralError("structural_error", "empty point list");
  const int n = points.front().var_count();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].var_count() != n)
      throw StructuralError("structural_error", "points of mixed dimension");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw StructuralError("structural_error", "duplicate points");
  }
  const int k = static_cast<int>(points.size());
  if (k > n) return false;
  Mat coords(0, n);
  for (const ProjectivePoint& p : points) coords.append_row(p.coords());
  return rank_of(coords) == k;
}

namespace {

// Dehomogenized coefficients of a nonzero binary form b(x1, x2) as a
// univariate polynomial in x1 with x2 = 1, low degree first, after stripping
// the common power of x1 (returned separately). The x2 power divides out as a
// degree drop.
struct BinarySplit {
  int x1_power = 0;
  int x2_power = 0;
  std::vector<Rat> poly;  // poly[j] = coefficient of x1^j; nonzero ends
};

BinarySplit split_binary(const HomogeneousForm& f) {
  const int d = f.degree();
  int min_x1 = d;
  int max_x1 = 0;
  for (const auto& [e, c] : f.terms()) {
    min_x1 = std::min(min_x1, e[0]);
    max_x1 = std::max(max_x1, e[0]);
  }
  BinarySplit out;
  out.x1_power = min_x1;
  out.x2_power = d - max_x1;
  out.poly.assign(static_cast<std::size_t>(max_x1 - min_x1 + 1), Rat(0));
  for (const auto& [e, c] : f.terms()) out.poly[static_cast<std::size_t>(e[0] - min_x1)] = c;
  return out;
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size()) {
    const Rat factor = a.back() / b.back();
    const std::size_t offset = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[offset + i] -= factor * b[i];
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  while (!b.empty()) {
    std::vector<Rat> r = poly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] /= a.back();
  if (!a.empty()) a.back() = 1;
  return a;
}

}  // namespace

HomogeneousForm binary_form_gcd(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.var_count() != 2 || b.var_count() != 2)
    throw StructuralError("structural_error", "binary forms required");
  if (a.is_zero() || b.is_zero())
    throw StructuralError("structural_error", "gcd of a zero form");
  if (a.ring() != b.ring())
    throw StructuralError("structural_error", "ring tag mismatch");
  const BinarySplit sa = split_binary(a);
  const BinarySplit sb = split_binary(b);
  const std::vector<Rat> g = poly_gcd(sa.poly, sb.poly);

  const int x1_power = std::min(sa.x1_power, sb.x1_power);
  const int x2_power = std::min(sa.x2_power, sb.x2_power);
  const int gcd_degree = static_cast<int>(g.size()) - 1;
  TermMap terms;
  for (int j = 0; j <= gcd_degree; ++j) {
    if (sgn(g[static_cast<std::size_t>(j)]) == 0) continue;
    Exponents e{x1_power + j, x2_power + (gcd_degree - j)};
    terms[std::move(e)] = g[static_cast<std::size_t>(j)];
  }
  return HomogeneousForm::from_terms(a.ring(), 2,
                                     x1_power + x2_power + gcd_degree,
                                     std::move(terms))
      .normalized();
}

ZkCertificate verify_base_locus_points(const GradedSubspace& U,
                                       const std::vector<ProjectivePoint>& points) {
  const int n = U.var_count();
  if (U.ring() != Ring::S)
    throw StructuralError("structural_error", "subspace of S_d required");
  if (U.dim() != n)
    throw StructuralError("structural_error", "n-dimensional subspace required");
  if (points.empty())
    throw StructuralError("structural_error", "empty point list");
  for (const ProjectivePoint& p : points)
    if (p.var_count() != n)
      throw StructuralError("structural_error", "point dimension mismatch");

  ZkCertificate cert;
  cert.exact = n == 2;
  const std::vector<HomogeneousForm> basis = U.basis_forms();

  bool vanishing = true;
  for (const ProjectivePoint& p : points)
    vanishing = vanishing && all_vanish_at(basis, p.coords());
  cert.checks.emplace_back("basis_vanishes_at_points", vanishing);

  bool reduced = vanishing;
  if (vanishing) {
    for (const ProjectivePoint& p : points) {
      Mat jacobian(0, n);
      for (const HomogeneousForm& g : basis) {
        std::vector<Rat> row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          row[static_cast<std::size_t>(i)] = g.derivative(i).evaluate(p.coords());
        jacobian.append_row(row);
      }
      reduced = reduced && rank_of(jacobian) == n - 1;
    }
  }
  cert.checks.emplace_back("points_reduced_isolated", reduced);

  bool glp = false;
  try {
    glp = general_linear_position(points);
  } catch (const StructuralError&) {
    glp = false;
  }
  cert.checks.emplace_back("general_linear_position", glp);

  bool base_locus = false;
  if (n == 2) {
    HomogeneousForm gcd = basis.front();
    for (std::size_t i = 1; i < basis.size(); ++i)
      gcd = binary_form_gcd(gcd, basis[i]);
    Exponents zero_exp{0, 0};
    HomogeneousForm expected = HomogeneousForm::monomial(Ring::S, 2, zero_exp, Rat(1));
    for (const ProjectivePoint& p : points) {
      // The linear form vanishing at [p1 : p2] is p2*x1 - p1*x2.
      TermMap terms;
      Exponents e1{1, 0};
      Exponents e2{0, 1};
      if (sgn(p.coords()[1]) != 0) terms[e1] = p.coords()[1];
      if (sgn(p.coords()[0]) != 0) terms[e2] = -p.coords()[0];
      expected = expected * HomogeneousForm::from_terms(Ring::S, 2, 1, std::move(terms));
    }
    base_locus = gcd == expected.normalized();
    cert.checks.emplace_back("divisorial_base_locus_matches", base_locus);
  } else {
    const int k = static_cast<int>(points.size());
    const int d = U.degree();
    const int socle = n * (d - 1);
    const std::vector<int> h = hilbert_function(basis, socle, n);
    base_locus = h[static_cast<std::size_t>(socle - 1)] == k &&
                 h[static_cast<std::size_t>(socle)] == k;
    cert.checks.emplace_back("hilbert_function_saturation_heuristic", base_locus);
  }

  cert.verified = vanishing && reduced && glp && base_locus;
  return cert;
}

bool is_smooth(const HomogeneousForm& f) {
  if (f.is_zero())
    throw StructuralError("structural_error", "smoothness of the zero form");
  if (f.degree() < 2)
    throw StructuralError("structural_error", "degree must be at least 2");
  return regular_sequence_check(partials(f)).is_regular;
}

HomogeneousForm fermat_form(int n, int m, Ring ring) {
  HomogeneousForm out(ring, n, m);
  for (int i = 0; i < n; ++i) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = m;
    out = out + HomogeneousForm::monomial(ring, n, e, Rat(1));
  }
  return out;
}

HomogeneousForm partial_fermat_form(int k, int m, const HomogeneousForm& tail) {
  const int n = tail.var_count();
  if (k < 0 || k > n)
    throw StructuralError("structural_error", "power count out of range");
  if (!tail.is_zero() && tail.degree() != m)
    throw StructuralError("structural_error", "tail degree mismatch");
  for (const auto& [e, c] : tail.terms())
    for (int i = 0; i < k; ++i)
      if (e[static_cast<std::size_t>(i)] > 0)
        throw StructuralError("structural_error",
                              "tail must avoid the first k variables");
  HomogeneousForm out = HomogeneousForm::from_terms(tail.ring(), n, m, tail.terms());
  for (int i = 0; i < k; ++i) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = m;
    out = out + HomogeneousForm::monomial(tail.ring(), n, e, Rat(1));
  }
  return out;
}

HomogeneousForm nodal_example(int n, int d) {
  if (n < 2 || d < 2)
    throw StructuralError("structural_error", "need n >= 2 and d >= 2");
  if (n == 2 && d == 2)
    throw StructuralError("structural_error", "(n, d) = (2, 2) is excluded");
  HomogeneousForm linear_sum(Ring::S, n, 1);
  HomogeneousForm square_sum(Ring::S, n, 2);
  HomogeneousForm power_sum(Ring::S, n, d + 1);
  for (int i = 0; i < n; ++i) {
    Exponents e1(static_cast<std::size_t>(n), 0);
    e1[static_cast<std::size_t>(i)] = 1;
    linear_sum = linear_sum + HomogeneousForm::monomial(Ring::S, n, e1, Rat(1));
    Exponents e2(static_cast<std::size_t>(n), 0);
    e2[static_cast<std::size_t>(i)] = 2;
    square_sum = square_sum + HomogeneousForm::monomial(Ring::S, n, e2, Rat(1));
    Exponents ed(static_cast<std::size_t>(n), 0);
    ed[static_cast<std::size_t>(i)] = d + 1;
    power_sum = power_sum + HomogeneousForm::monomial(Ring::S, n, ed, Rat(1));
  }
  return linear_sum.pow(d + 1).scaled(Rat(d - 1)) -
         (linear_sum.pow(d - 1) * square_sum).scaled(Rat(d + 1)) +
         power_sum.scaled(Rat(2));
}

}  // namespace assocform
