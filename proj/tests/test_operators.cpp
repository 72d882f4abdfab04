#include "doctest.h"

#include "appell/errors.hpp"
#include "appell/operators.hpp"

using namespace appell;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }
Poly xpow(unsigned n) { return Poly::monomial(q(1), n, Var::x); }

// A(dx) x^n straight from the Maclaurin coefficients of A.
Poly expand_operator(const RationalFunction& a, unsigned n) {
  const PowerSeries c = a.expand(n);
  std::vector<Rational> out(n + 1);
  for (unsigned k = 0; k <= n; ++k) out[n - k] = c[k] * falling_factorial(n, k);
  return Poly(out, Var::x);
}

RationalFunction rf(std::vector<Rational> n, std::vector<Rational> d) {
  return RationalFunction(Poly(std::move(n), Var::t), Poly(std::move(d), Var::t));
}

Poly third_derivative(const Poly& p) { return derivative(p, 3); }

}  // namespace

TEST_CASE("operator application") {
  CHECK(apply_operator(DiffOperator::identity(), xpow(5)) == xpow(5));
  const DiffOperator inv(rf({q(1)}, {q(1), q(-2)}));
  CHECK(apply_operator(inv, xpow(3)).coefficient_list() == "48,24,6,1");
  CHECK(DiffOperator(rf({q(1)}, {q(1), q(1)})).value().denominator() == Poly({q(1), q(1)}, Var::dx));
  CHECK_THROWS_AS(apply_operator(inv, Poly({q(1), q(1)}, Var::t)), UsageError);
}

TEST_CASE("oracle: operator application matches the series route") {
  const std::vector<RationalFunction> ops{rf({q(1), q(-1, 2)}, {q(1), q(1, 2)}),
                                          rf({q(1), q(-2, 3), q(1, 6)}, {q(1), q(1, 3)}),
                                          rf({q(3), q(1, 7)}, {q(1), q(-5, 4), q(2, 9), q(1, 11)}),
                                          euler_21_printed()};
  for (const auto& a : ops) {
    for (unsigned n = 0; n <= 12; ++n) CHECK(apply_operator(DiffOperator(a), xpow(n)) == expand_operator(a, n));
  }
}

TEST_CASE("approximated polynomials") {
  CHECK(pade_appell(FamilyId(FamilyKind::hermite1, q(-1)), 1, 1, 3).value.coefficient_list() == "-3/2,3,-3,1");
  const Poly he6 = pade_appell(FamilyId(FamilyKind::he), 1, 1, 6).value;
  CHECK(he6.coefficient_list() == "-45/2,0,45,0,-15,0,1");
  CHECK(he6 - exact_polynomial(FamilyId(FamilyKind::he), 6) == Poly::constant(q(-15, 2), Var::x));
  CHECK(pade_appell(FamilyId(FamilyKind::he), 1, 1, 4).value == exact_polynomial(FamilyId(FamilyKind::he), 4));
  CHECK(pade_appell(FamilyId(FamilyKind::he), 3, 2, 11).value == exact_polynomial(FamilyId(FamilyKind::he), 11));
  CHECK(pade_appell(FamilyId(FamilyKind::he), 3, 2, 12).value != exact_polynomial(FamilyId(FamilyKind::he), 12));
  CHECK(pade_appell(FamilyId(FamilyKind::euler), 0, 2, 3).value - exact_polynomial(FamilyId(FamilyKind::euler), 3) ==
        Poly::constant(q(1, 2), Var::x));
  CHECK_THROWS_AS(pade_appell(FamilyId(FamilyKind::euler), 2, 1, 3), PadeDefect);
  CHECK_THROWS_AS(family_operator(FamilyId(FamilyKind::chebyshev2, q(1)), 1, 1), UnsupportedError);
}

TEST_CASE("closed forms") {
  CHECK(closed_form(ClosedForm::hermite1_pade_11, 3).coefficient_list() == "-3/2,3,-3,1");
  CHECK(closed_form(ClosedForm::he_pade_11, 6).coefficient_list() == "-45/2,0,45,0,-15,0,1");
  CHECK(closed_form(ClosedForm::euler_pade_02, 2).coefficient_list() == "0,-1,1");
  CHECK(closed_form(ClosedForm::euler_pade_21, 3) - exact_polynomial(FamilyId(FamilyKind::euler), 3) ==
        Poly::constant(q(-1, 4), Var::x));
  CHECK(closed_form(ClosedForm::euler_pade_21_as_printed, 3) - closed_form(ClosedForm::euler_pade_21, 3) ==
        Poly::constant(q(-1, 48), Var::x));
  bool differs = false;
  for (unsigned n = 0; n <= 12; ++n) {
    differs = differs || closed_form(ClosedForm::euler_pade_21_as_printed, n) != closed_form(ClosedForm::euler_pade_21, n);
    CHECK(closed_form(ClosedForm::he_pade_02, n) ==
          expand_operator(pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg_half_square), 0, 2).value, n));
  }
  CHECK(differs);
  CHECK(parse_closed_form(to_string(ClosedForm::he_pade_32)) == ClosedForm::he_pade_32);
  CHECK_THROWS_AS(parse_closed_form("nope"), UsageError);
}

TEST_CASE("oracle: ODE residuals from independently built members") {
  for (unsigned n = 0; n <= 10; ++n) {
    // e_n(x,1) = sum n!/k! x^k
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[k] = factorial(n) / factorial(k);
    const Poly e(c, Var::x);
    const Poly X({q(0), q(1)}, Var::x);
    const Poly r = X * derivative(e, 2) - (X + Poly::constant(q(n), Var::x)) * derivative(e) + e * q(n);
    CHECK(r.degree() == -1);
    CHECK(ode_residual(OdeId::trunc_exp_second_order, n).degree() == -1);

    const Poly z = expand_operator(rf({q(1), q(-1, 2)}, {q(1), q(1, 2)}), n);
    const Poly rz = X * third_derivative(z) + derivative(z, 2) * (q(2) - q(n)) +
                    Poly({q(4), q(-4)}, Var::x) * derivative(z) + z * q(4 * n);
    CHECK(rz.degree() == -1);
    CHECK(ode_residual(OdeId::hermite_pade_third_order, n).degree() == -1);
    for (const Rational& y : {q(1), q(1, 3), q(-1, 4)}) {
      CHECK(ode_residual(OdeId::trunc_exp2_third_order, n, y).degree() == -1);
    }
  }
  CHECK_THROWS_AS(ode_residual(OdeId::trunc_exp2_third_order, 3), UsageError);
}

TEST_CASE("monomiality") {
  const RationalFunction h11 = pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg), 1, 1).value;
  const Monomiality ops = monomiality_operators(h11);
  CHECK(ops.shift().value() == RationalFunction(Poly::constant(q(-1), Var::dx), Poly({q(1), q(0), q(-1, 4)}, Var::dx)));
  for (unsigned n = 0; n <= 10; ++n) {
    const Poly a = apply_operator(DiffOperator(h11), xpow(n));
    CHECK(ops.lower(a) == apply_operator(DiffOperator(h11), xpow(n == 0 ? 0 : n - 1)) * q(n));
    CHECK(ops.raise(a) == apply_operator(DiffOperator(h11), xpow(n + 1)));
    CHECK(monomiality_ode_residual(h11, n).degree() == -1);
  }
  const RationalFunction te = rational_amplitude(AmplitudeSpec(AmplitudeKind::trunc_exp, q(1)));
  const Monomiality te_ops = monomiality_operators(te);
  for (unsigned n = 0; n <= 10; ++n) {
    const Poly a = exact_polynomial(FamilyId(FamilyKind::trunc_exp, q(1)), n);
    CHECK(te_ops.raise(te_ops.lower(a)) == a * q(n));
    CHECK(te_ops.raise(a) == exact_polynomial(FamilyId(FamilyKind::trunc_exp, q(1)), n + 1));
  }
  CHECK_THROWS_AS(monomiality_operators(rf({q(0), q(1)}, {q(1)})), NormalizationError);
}

TEST_CASE("structural identities") {
  for (unsigned n = 0; n <= 10; ++n) {
    for (const Rational& y : {q(1, 2), q(1), q(2)}) {
      CHECK(structural_identity(StructuralId::y_recurrence, FamilyKind::trunc_exp, n, y).degree() == -1);
      CHECK(structural_identity(StructuralId::euler_homogeneity, FamilyKind::trunc_exp, n, y).degree() == -1);
      CHECK(structural_identity(StructuralId::euler_homogeneity, FamilyKind::hermite1, n, y).degree() == -1);
      CHECK(structural_identity(StructuralId::y_evolution, FamilyKind::trunc_exp, n, y).degree() == -1);
      CHECK(structural_identity(StructuralId::trunc_exp2_evolution, FamilyKind::trunc_exp2, n, y).degree() == -1);
      CHECK(structural_identity(StructuralId::trunc_exp2_operational, FamilyKind::trunc_exp2, n, y).degree() == -1);
    }
  }
  CHECK_THROWS_AS(structural_identity(StructuralId::y_recurrence, FamilyKind::euler, 3, q(1)), UnsupportedError);
}

TEST_CASE("symbolic families bind to the exact members") {
  for (FamilyKind k : {FamilyKind::hermite1, FamilyKind::hermite2, FamilyKind::trunc_exp, FamilyKind::trunc_exp2}) {
    for (unsigned n = 0; n <= 8; ++n) {
      CHECK(bind_y(symbolic_family(k, n), q(-3, 7)) == exact_polynomial(FamilyId(k, q(-3, 7)), n));
    }
  }
}
