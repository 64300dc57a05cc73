#include "assocform/sampling.hpp"

#include <cstdlib>

#include "assocform/artinian.hpp"
#include "assocform/errors.hpp"
#include "assocform/geometry.hpp"

namespace assocform {

long long Rng::int_in(long long lo, long long hi) {
  if (lo > hi) throw StructuralError("structural_error", "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(next() % span);
}

Rat Rng::rational(long long num_bound, long long den_bound) {
  Rat out(Int(static_cast<long>(int_in(-num_bound, num_bound))),
          Int(static_cast<long>(int_in(1, den_bound))));
  out.canonicalize();
  return out;
}

Rat Rng::nonzero_rational(long long num_bound, long long den_bound) {
  while (true) {
    Rat out = rational(num_bound, den_bound);
    if (sgn(out) != 0) return out;
  }
}

Rng Rng::fork(std::uint64_t salt) const {
  Rng copy = *this;
  std::uint64_t mixed = copy.next() ^ (salt * 0x9e3779b97f4a7c15ULL);
  return Rng(mixed);
}

HomogeneousForm random_form(Rng& rng, Ring ring, int n, int degree,
                            bool ensure_nonzero) {
  const MonomialBasis basis(n, degree);
  while (true) {
    TermMap terms;
    for (int i = 0; i < basis.size(); ++i) {
      // Around half the support populated, small integer coefficients.
      if (rng.int_in(0, 1) == 0) continue;
      const Rat c(Int(static_cast<long>(rng.int_in(-4, 4))));
      if (sgn(c) == 0) continue;
      terms[basis.at(i)] = c;
    }
    HomogeneousForm out =
        HomogeneousForm::from_terms(ring, n, degree, std::move(terms));
    if (!ensure_nonzero || !out.is_zero()) return out;
  }
}

HomogeneousForm random_dense_form(Rng& rng, Ring ring, int n, int degree) {
  const MonomialBasis basis(n, degree);
  while (true) {
    TermMap terms;
    for (int i = 0; i < basis.size(); ++i) {
      const Rat c(Int(static_cast<long>(rng.int_in(-9, 9))));
      if (sgn(c) == 0) continue;
      terms[basis.at(i)] = c;
    }
    HomogeneousForm out =
        HomogeneousForm::from_terms(ring, n, degree, std::move(terms));
    if (!out.is_zero()) return out;
  }
}

GradedSubspace random_subspace(Rng& rng, Ring ring, int n, int degree, int dim) {
  const int ambient = MonomialBasis::dimension(n, degree);
  if (dim < 0 || dim > ambient)
    throw StructuralError("structural_error", "requested dimension out of range");
  while (true) {
    std::vector<HomogeneousForm> spanners;
    for (int i = 0; i < dim; ++i)
      spanners.push_back(random_form(rng, ring, n, degree));
    GradedSubspace out = GradedSubspace::span(ring, n, degree, spanners);
    if (out.dim() == dim) return out;
  }
}

Functional random_functional(Rng& rng, int n, int degree) {
  const int size = MonomialBasis::dimension(n, degree);
  std::vector<Rat> values(static_cast<std::size_t>(size));
  for (Rat& v : values) v = rng.rational(5, 3);
  return Functional(n, degree, std::move(values));
}

std::vector<Rat> random_point(Rng& rng, int n) {
  while (true) {
    std::vector<Rat> out(static_cast<std::size_t>(n));
    bool nonzero = false;
    for (Rat& v : out) {
      v = rng.rational(5, 2);
      nonzero = nonzero || sgn(v) != 0;
    }
    if (nonzero) return out;
  }
}

OneParamSubgroup random_one_ps(Rng& rng, int n, long long bound) {
  while (true) {
    std::vector<long long> w(static_cast<std::size_t>(n));
    long long total = 0;
    for (int i = 0; i + 1 < n; ++i) {
      w[static_cast<std::size_t>(i)] = rng.int_in(-bound, bound);
      total += w[static_cast<std::size_t>(i)];
    }
    w[static_cast<std::size_t>(n - 1)] = -total;
    if (std::abs(w[static_cast<std::size_t>(n - 1)]) > bound) continue;
    OneParamSubgroup lambda(std::move(w));
    if (!lambda.is_trivial()) return lambda;
  }
}

HomogeneousForm random_smooth_form(Rng& rng, int n, int degree) {
  while (true) {
    HomogeneousForm f = random_form(rng, Ring::S, n, degree);
    if (is_smooth(f)) return f;
  }
}

std::vector<HomogeneousForm> random_regular_sequence(Rng& rng, int n, int d) {
  while (true) {
    std::vector<HomogeneousForm> gens;
    for (int i = 0; i < n; ++i) gens.push_back(random_form(rng, Ring::S, n, d));
    if (regular_sequence_check(gens).is_regular) return gens;
  }
}

LinearChange random_unimodular(Rng& rng, int n) {
  Mat m = Mat::identity(n);
  const int shears = static_cast<int>(rng.int_in(2, 5));
  for (int s = 0; s < shears; ++s) {
    const int i = static_cast<int>(rng.int_in(0, n - 1));
    int j = static_cast<int>(rng.int_in(0, n - 1));
    if (i == j) j = (j + 1) % n;
    const Rat c = rng.nonzero_rational(2, 2);
    // Row operation row_i += c * row_j keeps the determinant at 1.
    for (int col = 0; col < n; ++col) m.at(i, col) += c * m.at(j, col);
  }
  return LinearChange(std::move(m));
}

}  // namespace assocform
