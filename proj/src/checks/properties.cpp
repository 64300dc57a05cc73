#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "assocform/apolarity.hpp"
#include "assocform/artinian.hpp"
#include "assocform/checks.hpp"
#include "assocform/errors.hpp"
#include "assocform/geometry.hpp"
#include "assocform/parse.hpp"
#include "assocform/sampling.hpp"
#include "checks/oracles.hpp"
#include "checks/runner.hpp"

namespace assocform::checks {

namespace {

std::string tag_nd(int n, int d) {
  return "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
}

CheckResult check_parse_roundtrip(std::uint64_t seed) {
  return run_check("P01", "parse/format round-trip", [&](Ctx& ctx) {
    Rng rng(seed + 101);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = static_cast<int>(rng.int_in(1, 4));
      const int m = static_cast<int>(rng.int_in(0, 6));
      const Ring ring = rng.int_in(0, 1) == 0 ? Ring::S : Ring::D;
      const HomogeneousForm f = random_form(rng, ring, n, m, false);
      if (f.is_zero()) continue;
      const std::string text = format_form(f);
      ctx.require(parse_form(text, n, ring) == f, "round-trip failed on " + text);
    }
    ctx.require(format_form(parse_form("2*x1*x2", 2)) == "2*x1*x2",
                "canonical text of 2*x1*x2");
  });
}

CheckResult check_group_action(std::uint64_t seed) {
  return run_check("P02", "linear changes form a right action", [&](Ctx& ctx) {
    Rng rng(seed + 102);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 4));
      const int m = static_cast<int>(rng.int_in(1, 4));
      const HomogeneousForm f = random_form(rng, Ring::S, n, m);
      ctx.require(apply_linear_change(f, LinearChange::identity(n)) == f,
                  "identity does not act trivially");
      const LinearChange g = random_unimodular(rng, n);
      const LinearChange h = random_unimodular(rng, n);
      ctx.require(apply_linear_change(apply_linear_change(f, g), h) ==
                      apply_linear_change(f, g.compose(h)),
                  "composition law failed at trial " + std::to_string(trial));
    }
  });
}

CheckResult check_derivative_rules(std::uint64_t seed) {
  return run_check("P03", "derivative linearity and Leibniz rule", [&](Ctx& ctx) {
    Rng rng(seed + 103);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const int ma = static_cast<int>(rng.int_in(1, 3));
      const int mb = static_cast<int>(rng.int_in(1, 2));
      const HomogeneousForm f = random_form(rng, Ring::S, n, ma);
      const HomogeneousForm g = random_form(rng, Ring::S, n, ma);
      const HomogeneousForm h = random_form(rng, Ring::S, n, mb);
      const int i = static_cast<int>(rng.int_in(0, n - 1));
      ctx.require((f + g).derivative(i) == f.derivative(i) + g.derivative(i),
                  "additivity failed");
      ctx.require((f * h).derivative(i) ==
                      f.derivative(i) * h + f * h.derivative(i),
                  "Leibniz rule failed");
    }
  });
}

CheckResult check_span_canonical(std::uint64_t seed) {
  return run_check("P04", "canonical echelon spans", [&](Ctx& ctx) {
    Rng rng(seed + 104);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const int m = static_cast<int>(rng.int_in(1, 5));
      const int ambient = MonomialBasis::dimension(n, m);
      const int dim = static_cast<int>(rng.int_in(1, std::min(ambient, 4)));
      const GradedSubspace u = random_subspace(rng, Ring::S, n, m, dim);

      // Shuffle and rescale a redundant spanning set.
      std::vector<HomogeneousForm> spanners = u.basis_forms();
      const std::size_t count = spanners.size();
      for (std::size_t i = 0; i < count; ++i) {
        HomogeneousForm combo = spanners[i].scaled(rng.nonzero_rational(3, 2));
        const std::size_t other = static_cast<std::size_t>(
            rng.int_in(0, static_cast<long long>(count) - 1));
        combo = combo + spanners[other].scaled(rng.rational(3, 2));
        spanners.push_back(combo);
      }
      for (std::size_t i = count; i-- > 1;) {
        const std::size_t j =
            static_cast<std::size_t>(rng.int_in(0, static_cast<long long>(i)));
        std::swap(spanners[i], spanners[j]);
      }
      const GradedSubspace again = GradedSubspace::span(Ring::S, n, m, spanners);
      ctx.require(again.reduced_basis() == u.reduced_basis(),
                  "echelon not bit-identical at trial " + std::to_string(trial));
    }
  });
}

CheckResult check_pairing_diagonal(std::uint64_t) {
  return run_check("P05", "polar pairing is diagonal", [&](Ctx& ctx) {
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
      const MonomialBasis basis(n, m);
      for (int i = 0; i < basis.size(); ++i) {
        for (int j = 0; j < basis.size(); ++j) {
          const Rat pairing = polar_pair(
              HomogeneousForm::monomial(Ring::S, n, basis.at(i), Rat(1)),
              HomogeneousForm::monomial(Ring::D, n, basis.at(j), Rat(1)));
          const Rat expected = i == j ? Rat(factorial_product(basis.at(i))) : Rat(0);
          ctx.require(pairing == expected, "pairing entry (" + std::to_string(i) +
                                               "," + std::to_string(j) + ") wrong");
        }
      }
    }
  });
}

CheckResult check_perp_involution_props(std::uint64_t seed) {
  return run_check("P06", "perp involution and dimension law", [&](Ctx& ctx) {
    Rng rng(seed + 106);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const int m = static_cast<int>(rng.int_in(1, 6));
      const Ring ring = rng.int_in(0, 1) == 0 ? Ring::S : Ring::D;
      const int ambient = MonomialBasis::dimension(n, m);
      const GradedSubspace w = random_subspace(
          rng, ring, n, m, static_cast<int>(rng.int_in(0, ambient)));
      ctx.require(perp(w).dim() + w.dim() == ambient, "dimension law failed");
      ctx.require(perp(perp(w)) == w, "involution failed");
    }
  });
}

CheckResult check_functional_identities(std::uint64_t seed) {
  return run_check("P07", "explicit dual elements represent functionals",
                   [&](Ctx& ctx) {
    Rng rng(seed + 107);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const int m = static_cast<int>(rng.int_in(1, 4));
      const Functional omega = random_functional(rng, n, m);
      const HomogeneousForm dual = inverse_system_of(omega);
      const HomogeneousForm f = random_form(rng, Ring::S, n, m);
      ctx.require(polar_pair(f, dual) == omega(f),
                  "pairing does not evaluate the functional");
    }
    for (int trial = 0; trial < 30; ++trial) {
      // The functional induced by pairing against g reconstructs g itself.
      const int n = static_cast<int>(rng.int_in(2, 3));
      const int m = static_cast<int>(rng.int_in(1, 4));
      const HomogeneousForm g = random_form(rng, Ring::D, n, m);
      const MonomialBasis basis(n, m);
      std::vector<Rat> values;
      values.reserve(static_cast<std::size_t>(basis.size()));
      for (int i = 0; i < basis.size(); ++i)
        values.push_back(polar_pair(
            HomogeneousForm::monomial(Ring::S, n, basis.at(i), Rat(1)), g));
      ctx.require(inverse_system_of(Functional(n, m, std::move(values))) == g,
                  "reconstruction from the induced functional failed");
      if (!g.is_zero()) {
        // And the normalized projection functional pairs to 1 with g.
        const Rat norm = polar_pair(
            form_from_coordinates(Ring::S, basis, coordinates(with_ring(g, Ring::S), basis)),
            g);
        ctx.require(sgn(norm) > 0, "self-pairing must be positive");
      }
    }
  });
}

CheckResult check_evaluation_props(std::uint64_t seed) {
  return run_check("P08", "evaluation identity", [&](Ctx& ctx) {
    Rng rng(seed + 108);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const int m = static_cast<int>(rng.int_in(1, 5));
      const Functional omega = random_functional(rng, n, m);
      const std::vector<Rat> a = random_point(rng, n);
      const Rat lhs = inverse_system_of(omega).evaluate(a);
      const Rat rhs = omega(
          power_of_linear(Ring::S, a, m).scaled(Rat(1) / Rat(factorial(m))));
      ctx.require(lhs == rhs, "identity failed at trial " + std::to_string(trial));
    }
  });
}

CheckResult check_vanishing_agreement(std::uint64_t seed) {
  return run_check("P09", "vanishing criterion agrees with evaluation",
                   [&](Ctx& ctx) {
    Rng rng(seed + 109);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const int m = static_cast<int>(rng.int_in(1, 4));
      const Ring ring = rng.int_in(0, 1) == 0 ? Ring::S : Ring::D;
      const int ambient = MonomialBasis::dimension(n, m);
      const GradedSubspace w = random_subspace(
          rng, ring, n, m, static_cast<int>(rng.int_in(1, std::min(ambient, 3))));
      const std::vector<Rat> a = random_point(rng, n);
      bool direct = true;
      for (const HomogeneousForm& f : w.basis_forms())
        direct = direct && sgn(f.evaluate(a)) == 0;
      // The routine cross-checks internally and throws on disagreement.
      ctx.require(vanishing_criterion(w, a) == direct,
                  "criterion disagrees with direct evaluation");
    }
    // A subspace with a designed common zero.
    const GradedSubspace slice = hilbert_point(
        {parse_form("x1^2*x2", 2), parse_form("x1*x2^2", 2)}, 3, 2);
    std::vector<Rat> e1{Rat(1), Rat(0)};
    ctx.require(vanishing_criterion(slice, e1), "ideal slice must vanish at (1,0)");
  });
}

CheckResult check_gorenstein_symmetry(std::uint64_t seed) {
  return run_check("P10", "Gorenstein symmetry of Hilbert functions", [&](Ctx& ctx) {
    Rng rng(seed + 110);
    const std::vector<std::tuple<int, int, int>> cases{
        {2, 3, 10}, {2, 4, 10}, {2, 5, 10}, {3, 2, 10}, {3, 3, 10}};
    for (const auto& [n, d, count] : cases) {
      for (int trial = 0; trial < count; ++trial) {
        const auto gens = random_regular_sequence(rng, n, d);
        const int socle = n * (d - 1);
        const std::vector<int> h = hilbert_function(gens, socle + 1, n);
        ctx.require(h[static_cast<std::size_t>(socle)] == 1, "socle dimension != 1");
        ctx.require(h[static_cast<std::size_t>(socle + 1)] == 0, "overflow != 0");
        bool symmetric = true;
        for (int t = 0; t <= socle; ++t)
          symmetric = symmetric && h[static_cast<std::size_t>(t)] ==
                                       h[static_cast<std::size_t>(socle - t)];
        ctx.require(symmetric, "Hilbert function not symmetric");
      }
    }
  });
}

CheckResult check_macaulay_duality(std::uint64_t seed) {
  return run_check("P11", "annihilator slices recover the Jacobian ideal",
                   [&](Ctx& ctx) {
    Rng rng(seed + 111);
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}}) {
      for (int trial = 0; trial < 5; ++trial) {
        const HomogeneousForm f = random_smooth_form(rng, n, d + 1);
        const HomogeneousForm assoc = associated_form(f);
        const auto jacobian = partials(f);
        for (int t = 1; t <= assoc.degree(); ++t) {
          ctx.require(apolar_slice(assoc, t) == hilbert_point(jacobian, t, n),
                      "slice mismatch at degree " + std::to_string(t));
        }
      }
    }
  });
}

CheckResult check_duality_props(std::uint64_t seed) {
  return run_check("P12", "gradient-Hilbert duality", [&](Ctx& ctx) {
    Rng rng(seed + 112);
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {3, 3}}) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto gens = random_regular_sequence(rng, n, d);
        const HomogeneousForm inverse = associated_form_of_sequence(gens);
        const int socle = n * (d - 1);
        for (int p = 1; p <= 2 && p <= socle; ++p)
          ctx.require(perp(gradient_point(inverse, p)) ==
                          hilbert_point(gens, socle - p, n),
                      "duality failed at p=" + std::to_string(p));
      }
    }
  });
}

CheckResult check_span_invariance(std::uint64_t seed) {
  return run_check("P13", "associated form depends only on the span", [&](Ctx& ctx) {
    Rng rng(seed + 113);
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
      for (int trial = 0; trial < 8; ++trial) {
        const auto gens = random_regular_sequence(rng, n, d);
        const LinearChange mix = random_unimodular(rng, n);
        std::vector<HomogeneousForm> mixed;
        for (int i = 0; i < n; ++i) {
          HomogeneousForm combo(Ring::S, n, d);
          for (int j = 0; j < n; ++j)
            combo = combo + gens[static_cast<std::size_t>(j)].scaled(mix.matrix().at(i, j));
          mixed.push_back(combo);
        }
        ctx.require(associated_form_of_sequence(gens).proportional_to(
                        associated_form_of_sequence(mixed)),
                    "mixed basis changed the projective class");
      }
    }
  });
}

CheckResult check_equivariance_props(std::uint64_t seed) {
  return run_check("P14", "equivariance under coordinate changes", [&](Ctx& ctx) {
    Rng rng(seed + 114);
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
      for (int trial = 0; trial < 6; ++trial) {
        const HomogeneousForm f = random_smooth_form(rng, n, d + 1);
        const LinearChange g = random_unimodular(rng, n);
        ctx.require(associated_form(apply_linear_change(f, g))
                        .proportional_to(apply_linear_change(
                            associated_form(f), g.contragredient())),
                    "equivariance failed");
      }
    }
  });
}

CheckResult check_direct_sum_factorization(std::uint64_t seed) {
  return run_check("P15", "associated forms of direct sums factor", [&](Ctx& ctx) {
    Rng rng(seed + 115);
    for (int trial = 0; trial < 5; ++trial) {
      const HomogeneousForm g1 = random_smooth_form(rng, 2, 3);
      const HomogeneousForm g2 = random_smooth_form(rng, 2, 3);
      const HomogeneousForm f =
          rename_variables(g1, 4, {0, 1}) + rename_variables(g2, 4, {2, 3});
      const HomogeneousForm product =
          rename_variables(associated_form(g1), 4, {0, 1}) *
          rename_variables(associated_form(g2), 4, {2, 3});
      ctx.require(associated_form(f).proportional_to(product),
                  "block factorization failed at trial " + std::to_string(trial));
    }
  });
}

CheckResult check_weight_multiplicativity(std::uint64_t seed) {
  return run_check("P16", "weights and initial parts are multiplicative",
                   [&](Ctx& ctx) {
    Rng rng(seed + 116);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const HomogeneousForm f =
          random_form(rng, Ring::S, n, static_cast<int>(rng.int_in(1, 3)));
      const HomogeneousForm g =
          random_form(rng, Ring::S, n, static_cast<int>(rng.int_in(1, 3)));
      const OneParamSubgroup lambda = random_one_ps(rng, n, 4);
      const WeightInit wf = weight_and_initial_part(f, lambda);
      const WeightInit wg = weight_and_initial_part(g, lambda);
      const WeightInit wfg = weight_and_initial_part(f * g, lambda);
      ctx.require(wfg.weight == wf.weight + wg.weight, "weight not additive");
      ctx.require(wfg.initial_part == wf.initial_part * wg.initial_part,
                  "initial part not multiplicative");
    }
  });
}

CheckResult check_limit_idempotence(std::uint64_t seed) {
  return run_check("P17", "limits are idempotent", [&](Ctx& ctx) {
    Rng rng(seed + 117);
    int found = 0;
    while (found < 40) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const HomogeneousForm f =
          random_form(rng, Ring::S, n, static_cast<int>(rng.int_in(1, 4)));
      const OneParamSubgroup lambda = random_one_ps(rng, n, 3);
      const auto limit = lambda_limit(f, lambda);
      if (!limit || limit->is_zero()) continue;
      const auto again = lambda_limit(*limit, lambda);
      ctx.require(again.has_value() && *again == *limit, "limit not idempotent");
      ++found;
    }
  });
}

CheckResult check_torus_props(std::uint64_t seed) {
  return run_check("P18", "torus decision matches brute force", [&](Ctx& ctx) {
    Rng rng(seed + 118);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const int m = static_cast<int>(rng.int_in(2, 5));
      const HomogeneousForm f = random_form(rng, Ring::S, n, m);
      ctx.require(torus_semistable(f) !=
                      brute_force_destabilizer(f, static_cast<long long>(m) * n),
                  "disagreement on " + format_form(f));
    }
  });
}

CheckResult check_ds_kernel_props(std::uint64_t seed) {
  return run_check("P19", "gradient fiber kernel invariants", [&](Ctx& ctx) {
    Rng rng(seed + 119);
    for (int trial = 0; trial < 8; ++trial) {
      const int n = static_cast<int>(rng.int_in(2, 3));
      const HomogeneousForm f = random_smooth_form(rng, n, n == 2 ? 4 : 3);
      const DirectSumReport report = ds_kernel(f);
      ctx.require(report.kernel.contains(f), "kernel misses the form itself");
      ctx.require(report.torus_dim == report.k - 1, "torus dimension mismatch");

      // Permuting the variables permutes the kernel; the dimension is stable.
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = (i + 1) % n;
      const DirectSumReport permuted = ds_kernel(rename_variables(f, n, perm));
      ctx.require(permuted.k == report.k, "kernel dimension not permutation-invariant");
    }
    for (int trial = 0; trial < 4; ++trial) {
      const HomogeneousForm g = random_smooth_form(rng, 2, 4);
      Exponents e{4, 0, 0};
      const HomogeneousForm block = HomogeneousForm::monomial(Ring::S, 3, e, Rat(1));
      const HomogeneousForm tail = rename_variables(g, 3, {1, 2});
      const DirectSumReport report = ds_kernel(block + tail);
      ctx.require(report.kernel.contains(block) && report.kernel.contains(tail),
                  "kernel misses a constructed summand");
      ctx.require(report.is_direct_sum, "constructed sum not flagged");
    }
  });
}

CheckResult check_one_ps_certificate(std::uint64_t seed) {
  return run_check("P20", "one-parameter direct-sum certificates", [&](Ctx& ctx) {
    Rng rng(seed + 120);
    {
      const OneParamSubgroup lambda({1, -1});
      const auto split = one_ps_direct_sum_certificate(fermat_form(2, 4), lambda);
      ctx.require(split.has_value(), "Fermat certificate missing");
      if (split) {
        ctx.require(split->low == std::vector<int>{1} &&
                        split->high == std::vector<int>{0},
                    "Fermat split groups wrong");
      }
    }
    for (int trial = 0; trial < 10; ++trial) {
      // Dense smooth forms essentially never satisfy the weight hypothesis.
      const HomogeneousForm f = random_smooth_form(rng, 2, 4);
      bool dense = true;
      for (int i = 0; i < 2; ++i) {
        Exponents pure{0, 0};
        pure[static_cast<std::size_t>(i)] = 4;
        dense = dense && f.terms().size() > 2;
      }
      if (!dense) continue;
      const OneParamSubgroup lambda = random_one_ps(rng, 2, 3);
      const auto split = one_ps_direct_sum_certificate(f, lambda);
      if (split) {
        // If the certificate fires, the split must be a literal support split.
        for (const auto& [e, c] : f.terms()) {
          bool low = false;
          bool high = false;
          for (int i : split->low) low = low || e[static_cast<std::size_t>(i)] > 0;
          for (int i : split->high) high = high || e[static_cast<std::size_t>(i)] > 0;
          ctx.require(!(low && high), "certified split mixes groups");
        }
      }
    }
    {
      const HomogeneousForm cross = parse_form("x1^3*x2+x1*x2^3+x1^2*x2^2", 2);
      const auto split =
          one_ps_direct_sum_certificate(cross, OneParamSubgroup({1, -1}));
      ctx.require(!split.has_value(), "cross-term form wrongly certified");
    }
  });
}

CheckResult check_singularity_witness(std::uint64_t seed) {
  return run_check("P21", "multiplicity witness equivalence", [&](Ctx& ctx) {
    Rng rng(seed + 121);
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
      const auto gens = random_regular_sequence(rng, n, d);
      const HomogeneousForm inverse = associated_form_of_sequence(gens);
      const int socle = n * (d - 1);
      std::vector<ProjectivePoint> points;
      for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(static_cast<std::size_t>(n), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        points.emplace_back(std::move(e));
      }
      for (int i = 0; i < 10; ++i) points.emplace_back(random_point(rng, n));
      for (const ProjectivePoint& p : points) {
        const int mult = multiplicity_at(inverse, p);
        const HomogeneousForm dual = p.dual_linear_form(Ring::S);
        for (int ell = 0; ell < socle; ++ell) {
          const bool member =
              hilbert_point(gens, socle - ell, n).contains(dual.pow(socle - ell));
          ctx.require(member == (mult >= ell + 1), "equivalence failed");
        }
      }
    }
  });
}

CheckResult check_nodal_certification(std::uint64_t) {
  return run_check("P22", "nodal examples are honest nodal forms", [&](Ctx& ctx) {
    for (const auto& [n, d] :
         std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
      const HomogeneousForm f = nodal_example(n, d);
      for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(static_cast<std::size_t>(n), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        const ProjectivePoint p(e);
        ctx.require(multiplicity_at(f, p) == 2,
                    tag_nd(n, d) + " multiplicity at a coordinate point");
        ctx.require(rank_of(hessian_at(f, p)) == n - 1,
                    tag_nd(n, d) + " Hessian corank");
        ctx.require(is_ordinary_double_point(f, p),
                    tag_nd(n, d) + " node recognition");
      }
      ctx.require(!is_smooth(f), tag_nd(n, d) + " must be singular");
      ctx.require(torus_semistable(f), tag_nd(n, d) + " must be semistable");
    }
  });
}

CheckResult check_smoothness_oracle(std::uint64_t seed) {
  return run_check("P23", "smoothness agrees with the resultant oracle",
                   [&](Ctx& ctx) {
    Rng rng(seed + 123);
    for (int trial = 0; trial < 100; ++trial) {
      const int m = static_cast<int>(rng.int_in(4, 5));
      const HomogeneousForm f = random_form(rng, Ring::S, 2, m);
      const HomogeneousForm fx = f.derivative(0);
      const HomogeneousForm fy = f.derivative(1);
      bool oracle_smooth = false;
      if (!fx.is_zero() && !fy.is_zero())
        oracle_smooth = sgn(binary_resultant(fx, fy)) != 0;
      ctx.require(is_smooth(f) == oracle_smooth,
                  "disagreement on " + format_form(f));
    }
  });
}

CheckResult check_base_locus_certificates(std::uint64_t) {
  return run_check("P24", "verified base loci imply the minimal quotient",
                   [&](Ctx& ctx) {
    for (const auto& [n, d] :
         std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
      const HomogeneousForm f = nodal_example(n, d);
      const GradedSubspace u = GradedSubspace::span(Ring::S, n, d, partials(f));
      std::vector<ProjectivePoint> points;
      for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(static_cast<std::size_t>(n), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        points.emplace_back(std::move(e));
      }
      const ZkCertificate cert = verify_base_locus_points(u, points);
      ctx.require(cert.verified, tag_nd(n, d) + " certificate not verified");
      ctx.require(cert.exact == (n == 2), tag_nd(n, d) + " certificate flavor");
      if (cert.verified)
        ctx.require(in_agr_domain(u), tag_nd(n, d) + " verified but not in domain");
    }
    // Smooth forms have empty base locus: nothing to verify.
    const GradedSubspace fermat_grad =
        GradedSubspace::span(Ring::S, 2, 3, partials(fermat_form(2, 4)));
    std::vector<Rat> e1{Rat(1), Rat(0)};
    const ZkCertificate cert =
        verify_base_locus_points(fermat_grad, {ProjectivePoint(e1)});
    ctx.require(!cert.verified, "empty base locus wrongly verified");
  });
}

CheckResult check_cli_properties(std::uint64_t, const CliRunner& cli) {
  return run_check("P25", "command dispatch determinism", [&](Ctx& ctx) {
    if (!cli) {
      ctx.require(false, "no CLI runner wired in");
      return;
    }
    const std::vector<std::vector<std::string>> invocations{
        {"example", "fermat", "--n", "3", "--m", "4"},
        {"assoc-seq", "--n", "2", "x1^3", "x2^3"},
        {"dual-check", "--n", "2", "--p", "1", "x1^3", "x2^3"},
        {"zk-verify", "--n", "2", "--points", "1,0;0,1", "x1^2*x2", "x1*x2^2"},
    };
    for (const auto& args : invocations) {
      std::string outputs[2];
      for (int pass = 0; pass < 2; ++pass) {
        std::istringstream in;
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli(args, in, out, err);
        ctx.require(code == 0, args.front() + " exited with " + std::to_string(code));
        outputs[pass] = out.str();
      }
      ctx.require(outputs[0] == outputs[1], args.front() + " output unstable");
    }
  });
}

}  // namespace

std::vector<CheckResult> run_properties(std::uint64_t seed, const CliRunner& cli) {
  std::vector<CheckResult> results;
  results.push_back(check_parse_roundtrip(seed));
  results.push_back(check_group_action(seed));
  results.push_back(check_derivative_rules(seed));
  results.push_back(check_span_canonical(seed));
  results.push_back(check_pairing_diagonal(seed));
  results.push_back(check_perp_involution_props(seed));
  results.push_back(check_functional_identities(seed));
  results.push_back(check_evaluation_props(seed));
  results.push_back(check_vanishing_agreement(seed));
  results.push_back(check_gorenstein_symmetry(seed));
  results.push_back(check_macaulay_duality(seed));
  results.push_back(check_duality_props(seed));
  results.push_back(check_span_invariance(seed));
  results.push_back(check_equivariance_props(seed));
  results.push_back(check_direct_sum_factorization(seed));
  results.push_back(check_weight_multiplicativity(seed));
  results.push_back(check_limit_idempotence(seed));
  results.push_back(check_torus_props(seed));
  results.push_back(check_ds_kernel_props(seed));
  results.push_back(check_one_ps_certificate(seed));
  results.push_back(check_singularity_witness(seed));
  results.push_back(check_nodal_certification(seed));
  results.push_back(check_smoothness_oracle(seed));
  results.push_back(check_base_locus_certificates(seed));
  results.push_back(check_cli_properties(seed, cli));
  return results;
}

}  // namespace assocform::checks
