#include "assocform/form.hpp"

#include <utility>

#include "assocform/errors.hpp"

namespace assocform {

char ring_variable_letter(Ring ring) { return ring == Ring::S ? 'x' : 'z'; }

namespace {

void check_exponents(int n, int degree, const Exponents& e) {
  if (static_cast<int>(e.size()) != n)
    throw StructuralError("structural_error", "exponent vector length mismatch");
  for (int v : e)
    if (v < 0) throw StructuralError("structural_error", "negative exponent");
  if (exponent_sum(e) != degree)
    throw StructuralError("structural_error", "exponent sum does not match degree");
}

void check_same_piece(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.ring() != b.ring())
    throw StructuralError("structural_error", "ring tag mismatch");
  if (a.var_count() != b.var_count())
    throw StructuralError("structural_error", "variable count mismatch");
  if (a.degree() != b.degree())
    throw StructuralError("structural_error", "degree mismatch");
}

}  // namespace

HomogeneousForm::HomogeneousForm(Ring ring, int n, int degree)
    : ring_(ring), n_(n), degree_(degree) {
  if (n < 1) throw StructuralError("structural_error", "variable count must be >= 1");
  if (degree < 0) throw StructuralError("structural_error", "degree must be >= 0");
}

HomogeneousForm HomogeneousForm::monomial(Ring ring, int n, const Exponents& exponents,
                                          const Rat& coefficient) {
  HomogeneousForm f(ring, n, exponent_sum(exponents));
  check_exponents(n, f.degree_, exponents);
  if (sgn(coefficient) != 0) f.terms_[exponents] = coefficient;
  return f;
}

HomogeneousForm HomogeneousForm::from_terms(Ring ring, int n, int degree, TermMap terms) {
  HomogeneousForm f(ring, n, degree);
  for (auto it = terms.begin(); it != terms.end();) {
    check_exponents(n, degree, it->first);
    if (sgn(it->second) == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  f.terms_ = std::move(terms);
  return f;
}

Rat HomogeneousForm::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

const std::pair<const Exponents, Rat>& HomogeneousForm::leading_term() const {
  if (terms_.empty())
    throw StructuralError("structural_error", "leading term of the zero form");
  return *terms_.begin();
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& other) const {
  check_same_piece(*this, other);
  TermMap out = terms_;
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = out.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) out.erase(it);
    }
  }
  return from_terms(ring_, n_, degree_, std::move(out));
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& other) const {
  return *this + (-other);
}

HomogeneousForm HomogeneousForm::operator-() const { return scaled(Rat(-1)); }

HomogeneousForm HomogeneousForm::scaled(const Rat& c) const {
  HomogeneousForm out(ring_, n_, degree_);
  if (sgn(c) == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_[e] = coeff * c;
  return out;
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& other) const {
  if (ring_ != other.ring_)
    throw StructuralError("structural_error", "ring tag mismatch");
  if (n_ != other.n_)
    throw StructuralError("structural_error", "variable count mismatch");
  TermMap out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(ea);
      for (int i = 0; i < n_; ++i) e[static_cast<std::size_t>(i)] += eb[static_cast<std::size_t>(i)];
      auto [it, inserted] = out.emplace(std::move(e), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  }
  return from_terms(ring_, n_, degree_ + other.degree_, std::move(out));
}

HomogeneousForm HomogeneousForm::pow(int k) const {
  if (k < 0) throw StructuralError("structural_error", "negative power");
  Exponents zero(static_cast<std::size_t>(n_), 0);
  HomogeneousForm out = monomial(ring_, n_, zero, Rat(1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

HomogeneousForm HomogeneousForm::derivative(int var) const {
  if (var < 0 || var >= n_)
    throw StructuralError("structural_error", "derivative index out of range");
  HomogeneousForm out(ring_, n_, degree_ > 0 ? degree_ - 1 : 0);
  if (degree_ == 0) return out;
  for (const auto& [e, c] : terms_) {
    const int exp = e[static_cast<std::size_t>(var)];
    if (exp == 0) continue;
    Exponents d(e);
    --d[static_cast<std::size_t>(var)];
    out.terms_[std::move(d)] = c * exp;
  }
  return out;
}

Rat HomogeneousForm::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw StructuralError("structural_error", "point dimension mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k)
        term *= point[static_cast<std::size_t>(i)];
    total += term;
  }
  return total;
}

HomogeneousForm HomogeneousForm::normalized() const {
  if (terms_.empty()) return *this;
  std::vector<Rat> coeffs;
  coeffs.reserve(terms_.size());
  for (const auto& [e, c] : terms_) coeffs.push_back(c);
  make_primitive(coeffs);
  if (sgn(coeffs.front()) < 0)
    for (Rat& c : coeffs) c = -c;
  TermMap out;
  std::size_t i = 0;
  for (const auto& [e, c] : terms_) out[e] = coeffs[i++];
  return from_terms(ring_, n_, degree_, std::move(out));
}

bool HomogeneousForm::proportional_to(const HomogeneousForm& other) const {
  check_same_piece(*this, other);
  return normalized() == other.normalized();
}

bool HomogeneousForm::operator==(const HomogeneousForm& other) const {
  return ring_ == other.ring_ && n_ == other.n_ && degree_ == other.degree_ &&
         terms_ == other.terms_;
}

LinearChange::LinearChange(Mat matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1)
    throw StructuralError("structural_error", "linear change must be square");
  det_ = assocform::determinant(matrix_);
  if (sgn(det_) == 0)
    throw StructuralError("singular_matrix", "linear change must be invertible");
}

LinearChange LinearChange::identity(int n) { return LinearChange(Mat::identity(n)); }

LinearChange LinearChange::compose(const LinearChange& other) const {
  return LinearChange(matrix_ * other.matrix_);
}

LinearChange LinearChange::inverse() const {
  return LinearChange(assocform::inverse(matrix_));
}

LinearChange LinearChange::transposed() const {
  return LinearChange(matrix_.transposed());
}

LinearChange LinearChange::contragredient() const {
  return LinearChange(assocform::inverse(matrix_).transposed());
}

HomogeneousForm apply_linear_change(const HomogeneousForm& f, const LinearChange& g) {
  if (f.var_count() != g.var_count())
    throw StructuralError("structural_error", "variable count mismatch");
  const int n = f.var_count();

  // Row i substitutes for variable i; cache its powers as they grow.
  std::vector<HomogeneousForm> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    TermMap terms;
    for (int j = 0; j < n; ++j) {
      const Rat& c = g.matrix().at(i, j);
      if (sgn(c) == 0) continue;
      Exponents e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = 1;
      terms[std::move(e)] = c;
    }
    rows.push_back(HomogeneousForm::from_terms(f.ring(), n, 1, std::move(terms)));
  }
  std::vector<std::vector<HomogeneousForm>> powers(static_cast<std::size_t>(n));
  Exponents zero(static_cast<std::size_t>(n), 0);
  const HomogeneousForm one = HomogeneousForm::monomial(f.ring(), n, zero, Rat(1));
  for (int i = 0; i < n; ++i) powers[static_cast<std::size_t>(i)].push_back(one);

  auto power_of_row = [&](int i, int k) -> const HomogeneousForm& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * rows[static_cast<std::size_t>(i)]);
    return cache[static_cast<std::size_t>(k)];
  };

  HomogeneousForm out(f.ring(), n, f.degree());
  for (const auto& [e, c] : f.terms()) {
    HomogeneousForm term = one.scaled(c);
    for (int i = 0; i < n; ++i)
      if (e[static_cast<std::size_t>(i)] > 0)
        term = term * power_of_row(i, e[static_cast<std::size_t>(i)]);
    out = out + term;
  }
  return out;
}

HomogeneousForm rename_variables(const HomogeneousForm& f, int new_n,
                                 const std::vector<int>& var_map) {
  if (static_cast<int>(var_map.size()) != f.var_count())
    throw StructuralError("structural_error", "variable map length mismatch");
  std::vector<bool> used(static_cast<std::size_t>(new_n), false);
  for (int target : var_map) {
    if (target < 0 || target >= new_n || used[static_cast<std::size_t>(target)])
      throw StructuralError("structural_error", "variable map must be injective");
    used[static_cast<std::size_t>(target)] = true;
  }
  TermMap out;
  for (const auto& [e, c] : f.terms()) {
    Exponents mapped(static_cast<std::size_t>(new_n), 0);
    for (int i = 0; i < f.var_count(); ++i)
      mapped[static_cast<std::size_t>(var_map[static_cast<std::size_t>(i)])] =
          e[static_cast<std::size_t>(i)];
    out[std::move(mapped)] = c;
  }
  return HomogeneousForm::from_terms(f.ring(), new_n, f.degree(), std::move(out));
}

HomogeneousForm with_ring(const HomogeneousForm& f, Ring ring) {
  return HomogeneousForm::from_terms(ring, f.var_count(), f.degree(), f.terms());
}

std::vector<Rat> coordinates(const HomogeneousForm& f, const MonomialBasis& basis) {
  if (f.var_count() != basis.var_count() || f.degree() != basis.degree())
    throw StructuralError("structural_error", "form does not live in the graded piece");
  std::vector<Rat> out(static_cast<std::size_t>(basis.size()));
  for (const auto& [e, c] : f.terms())
    out[static_cast<std::size_t>(basis.index_of(e))] = c;
  return out;
}

HomogeneousForm form_from_coordinates(Ring ring, const MonomialBasis& basis,
                                      const std::vector<Rat>& coords) {
  if (static_cast<int>(coords.size()) != basis.size())
    throw StructuralError("structural_error", "coordinate length mismatch");
  TermMap terms;
  for (int i = 0; i < basis.size(); ++i)
    if (sgn(coords[static_cast<std::size_t>(i)]) != 0)
      terms[basis.at(i)] = coords[static_cast<std::size_t>(i)];
  return HomogeneousForm::from_terms(ring, basis.var_count(), basis.degree(),
                                     std::move(terms));
}

}  // namespace assocform
