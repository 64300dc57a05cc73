#pragma once

#include <string>
#include <utility>
#include <vector>

#include "assocform/subspace.hpp"

namespace assocform {

// Rational point of P^{n-1} with the canonical normalization: the first
// nonzero coordinate is scaled to 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rat> coords);

  int var_count() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rat>& coords() const { return coords_; }

  // The linear form sum_i coords_i * v_i in the requested ring (degree 1).
  HomogeneousForm dual_linear_form(Ring ring) const;

  bool operator==(const ProjectivePoint& other) const { return coords_ == other.coords_; }
  bool operator!=(const ProjectivePoint& other) const { return !(*this == other); }

 private:
  std::vector<Rat> coords_;
};

// Multiplicity of the hypersurface {f = 0} at p: 0 when f(p) != 0 (the point
// is off the hypersurface), otherwise the smallest order with a nonvanishing
// partial derivative at p. 1 at smooth points, 2 at double points.
int multiplicity_at(const HomogeneousForm& f, const ProjectivePoint& p);

// For a Gorenstein quotient with the given socle degree: the membership pair
// (L^{socle-ell} in I_{socle-ell}, L^{socle-ell-1} in I_{socle-ell-1}) for the
// linear form L dual to p. The pattern (true, false) holds iff the inverse
// system has multiplicity exactly ell+1 at p.
std::pair<bool, bool> veronese_membership_pattern(
    const std::vector<HomogeneousForm>& generators, int socle_degree,
    const ProjectivePoint& p, int ell);

// Multiplicity exactly 2 with Hessian rank n-1 (the largest possible at a
// singular point of a cone).
bool is_ordinary_double_point(const HomogeneousForm& f, const ProjectivePoint& p);

Mat hessian_at(const HomogeneousForm& f, const ProjectivePoint& p);

// Distinct points are in general linear position iff there are at most n of
// them and their coordinate matrix has full rank.
bool general_linear_position(const std::vector<ProjectivePoint>& points);

struct ZkCertificate {
  bool verified = false;
  bool exact = false;  // false = HEURISTIC saturation check (n >= 3)
  std::vector<std::pair<std::string, bool>> checks;
  std::string status() const { return exact ? "EXACT" : "HEURISTIC"; }
};

// Verifies that the scheme cut out by an n-dimensional subspace U of S_d is
// exactly the given reduced points in general linear position. For n = 2 the
// divisorial base locus (gcd of the basis) completes an exact scheme-
// theoretic check; for n >= 3 a documented Hilbert-function heuristic backs
// the local checks and the certificate is flagged HEURISTIC.
ZkCertificate verify_base_locus_points(const GradedSubspace& U,
                                       const std::vector<ProjectivePoint>& points);

// Smoothness of {f = 0}: the partial derivatives form a regular sequence.
bool is_smooth(const HomogeneousForm& f);

// gcd of two nonzero binary forms, normalized to primitive integer
// coefficients with positive leading coefficient.
HomogeneousForm binary_form_gcd(const HomogeneousForm& a, const HomogeneousForm& b);

// Example generators.
HomogeneousForm fermat_form(int n, int m, Ring ring = Ring::S);
// x_1^m + ... + x_k^m + tail, where the tail must avoid the first k variables.
HomogeneousForm partial_fermat_form(int k, int m, const HomogeneousForm& tail);
// The degree d+1 form with exactly n ordinary double points at the coordinate
// points: (d-1)(x_1+...+x_n)^{d+1} - (d+1)(x_1+...+x_n)^{d-1}(x_1^2+...+x_n^2)
// + 2(x_1^{d+1}+...+x_n^{d+1}). Excludes (n, d) = (2, 2).
HomogeneousForm nodal_example(int n, int d);

}  // namespace assocform
