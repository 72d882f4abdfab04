#include "appell/operators.hpp"

#include <array>
#include <utility>

#include "appell/errors.hpp"

namespace appell {

namespace {

constexpr std::array<std::pair<ClosedForm, std::string_view>, 8> kClosedFormNames{{
    {ClosedForm::hermite1_pade_11, "hermite1_pade_11"},
    {ClosedForm::hermite1_pade_21, "hermite1_pade_21"},
    {ClosedForm::he_pade_11, "he_pade_11"},
    {ClosedForm::he_pade_02, "he_pade_02"},
    {ClosedForm::he_pade_32, "he_pade_32"},
    {ClosedForm::euler_pade_02, "euler_pade_02"},
    {ClosedForm::euler_pade_21, "euler_pade_21"},
    {ClosedForm::euler_pade_21_as_printed, "euler_pade_21_as_printed"},
}};

Poly x_power(unsigned n) { return Poly::monomial(Rational(1), n, Var::x); }

// Member `index` of a family, or zero for a negative index.
Poly member(FamilyKind kind, const Rational& y, long index) {
  if (index < 0) return Poly(Var::x);
  return exact_polynomial(FamilyId(kind, y), static_cast<unsigned>(index));
}

// n! sum_r U_r(a,b) x^(n - step r)/(n - step r)!
Poly chebyshev_sum(unsigned n, const Rational& a, const Rational& b, unsigned step) {
  std::vector<Rational> c(n + 1);
  NumberSequence u = NumberSequence::chebyshev(a, b);
  for (unsigned r = 0; step * r <= n; ++r) c[n - step * r] = falling_factorial(n, step * r) * u.at(r);
  return Poly(std::move(c), Var::x);
}

Poly chebyshev_sum_or_zero(long n, const Rational& a, const Rational& b, unsigned step) {
  return n < 0 ? Poly(Var::x) : chebyshev_sum(static_cast<unsigned>(n), a, b, step);
}

Rational ratio(std::int64_t p, std::int64_t q) { return Rational(p, q); }

}  // namespace

DiffOperator::DiffOperator(const RationalFunction& f) : value_(f.with_var(Var::dx)) {}

DiffOperator DiffOperator::identity() {
  return DiffOperator(RationalFunction(Poly::constant(Rational(1), Var::dx)));
}

Poly apply_operator(const DiffOperator& op, const Poly& f) {
  if (f.var() != Var::x) throw UsageError("apply_operator: operand must be a polynomial in x");
  if (f.is_zero()) return f;
  const auto deg = static_cast<std::size_t>(f.degree());
  // sum_k coeffs[k] d^k g
  auto apply_poly = [](std::span<const Rational> coeffs, const Poly& g) {
    Poly out(Var::x);
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= g.degree(); ++k) {
      if (!coeffs[k].is_zero()) out += derivative(g, static_cast<unsigned>(k)) * coeffs[k];
    }
    return out;
  };
  const PowerSeries inv = series_invert(op.value().denominator(), deg);
  const Poly& num = op.value().numerator();
  const Poly inner = apply_poly(inv.coefficients(), f);
  return apply_poly(num.coefficients(), inner);
}

DiffOperator family_operator(const FamilyId& family, std::size_t m, std::size_t n) {
  const AmplitudeImage img = family_amplitude(family);
  const PadeApproximant base = pade_of_amplitude(img.base, m, n);
  return DiffOperator(substitute(base.value, img.scale, img.power));
}

ApproximatedPolynomial pade_appell(const FamilyId& family, std::size_t m, std::size_t n, unsigned index) {
  const DiffOperator op = family_operator(family, m, n);
  return ApproximatedPolynomial{family, m, n, index, apply_operator(op, x_power(index))};
}

std::string to_string(ClosedForm id) {
  for (const auto& [k, name] : kClosedFormNames) {
    if (k == id) return std::string(name);
  }
  return "?";
}

ClosedForm parse_closed_form(std::string_view name) {
  for (const auto& [k, n] : kClosedFormNames) {
    if (n == name) return k;
  }
  throw UsageError("unknown closed form '" + std::string(name) + "'");
}

Poly closed_form(ClosedForm id, unsigned n) {
  const long i = n;
  const Rational nn(static_cast<std::int64_t>(n));
  const Rational nn1 = nn * (nn - Rational(1));
  switch (id) {
    case ClosedForm::hermite1_pade_11: {
      const Rational y = ratio(-1, 2);
      return member(FamilyKind::trunc_exp, y, i) - member(FamilyKind::trunc_exp, y, i - 1) * (nn / Rational(2));
    }
    case ClosedForm::hermite1_pade_21: {
      const Rational y = ratio(-1, 3);
      return member(FamilyKind::trunc_exp, y, i) - member(FamilyKind::trunc_exp, y, i - 1) * (ratio(2, 3) * nn) +
             member(FamilyKind::trunc_exp, y, i - 2) * (ratio(1, 6) * nn1);
    }
    case ClosedForm::he_pade_11: {
      const Rational y = ratio(-1, 4);
      return member(FamilyKind::trunc_exp2, y, i) - member(FamilyKind::trunc_exp2, y, i - 2) * (nn1 / Rational(4));
    }
    case ClosedForm::he_pade_02:
      return chebyshev_sum(n, ratio(1, 2), ratio(1, 8), 2);
    case ClosedForm::he_pade_32: {
      const Rational a = ratio(1, 5);
      const Rational b = ratio(1, 80);
      return chebyshev_sum(n, a, b, 2) - chebyshev_sum_or_zero(i - 2, a, b, 2) * (ratio(3, 10) * falling_factorial(n, 2)) +
             chebyshev_sum_or_zero(i - 4, a, b, 2) * (ratio(3, 80) * falling_factorial(n, 4)) -
             chebyshev_sum_or_zero(i - 6, a, b, 2) * (ratio(1, 480) * falling_factorial(n, 6));
    }
    case ClosedForm::euler_pade_02:
      return chebyshev_sum(n, ratio(1, 2), ratio(1, 4), 1);
    case ClosedForm::euler_pade_21:
    case ClosedForm::euler_pade_21_as_printed: {
      const Rational y = ratio(-1, 12);
      const FamilyKind last = id == ClosedForm::euler_pade_21 ? FamilyKind::trunc_exp : FamilyKind::trunc_exp2;
      return member(FamilyKind::trunc_exp, y, i) - member(FamilyKind::trunc_exp, y, i - 1) * (ratio(5, 12) * nn) -
             member(last, y, i - 2) * (nn1 / Rational(24));
    }
  }
  throw UsageError("unknown closed form");
}

Monomiality::Monomiality(const RationalFunction& amplitude) : shift_(log_derivative(amplitude)) {}

Poly Monomiality::lower(const Poly& f) const { return derivative(f); }

Poly Monomiality::raise(const Poly& f) const {
  return shift_up(f) + apply_operator(shift_, f);
}

Monomiality monomiality_operators(const RationalFunction& amplitude) { return Monomiality(amplitude); }

Poly monomiality_ode_residual(const RationalFunction& amplitude, unsigned n) {
  const DiffOperator a(amplitude);
  const DiffOperator a_prime(derivative(amplitude));
  const Poly an = apply_operator(a, x_power(n));
  const Poly dan = derivative(an);
  return apply_operator(a, shift_up(dan)) + apply_operator(a_prime, dan) - apply_operator(a, an) * Rational(n);
}

std::string to_string(OdeId id) {
  switch (id) {
    case OdeId::trunc_exp_second_order: return "trunc_exp_second_order";
    case OdeId::hermite_pade_third_order: return "hermite_pade_third_order";
    case OdeId::trunc_exp2_third_order: return "trunc_exp2_third_order";
  }
  return "?";
}

Poly ode_residual(OdeId id, unsigned n, const std::optional<Rational>& y) {
  const Rational nn(static_cast<std::int64_t>(n));
  const Poly x = x_power(1);
  switch (id) {
    case OdeId::trunc_exp_second_order: {
      const Poly e = exact_polynomial(FamilyId(FamilyKind::trunc_exp, Rational(1)), n);
      const Poly x_plus_n = x + Poly::constant(nn, Var::x);
      return x * derivative(e, 2) - x_plus_n * derivative(e) + e * nn;
    }
    case OdeId::hermite_pade_third_order: {
      const Poly z = closed_form(ClosedForm::hermite1_pade_11, n);
      const Poly four_one_minus_x({Rational(4), Rational(-4)}, Var::x);
      return x * derivative(z, 3) + derivative(z, 2) * (Rational(2) - nn) + four_one_minus_x * derivative(z) +
             z * (Rational(4) * nn);
    }
    case OdeId::trunc_exp2_third_order: {
      if (!y) throw UsageError("ode_residual: trunc_exp2_third_order needs y");
      const Poly z = exact_polynomial(FamilyId(FamilyKind::trunc_exp2, *y), n);
      return x * derivative(z, 3) * *y - derivative(z, 2) * (nn * *y) - x * derivative(z) + z * nn;
    }
  }
  throw UsageError("unknown ODE id");
}

std::string to_string(StructuralId id) {
  switch (id) {
    case StructuralId::y_recurrence: return "y_recurrence";
    case StructuralId::y_evolution: return "y_evolution";
    case StructuralId::euler_homogeneity: return "euler_homogeneity";
    case StructuralId::trunc_exp2_evolution: return "trunc_exp2_evolution";
    case StructuralId::trunc_exp2_operational: return "trunc_exp2_operational";
  }
  return "?";
}

ParamPoly symbolic_family(FamilyKind family, unsigned n) {
  ParamPoly out;
  switch (family) {
    case FamilyKind::hermite1:
      for (unsigned r = 0; r <= n; ++r) out += ParamPoly::term(binomial(n, r), n - r, r);
      return out;
    case FamilyKind::trunc_exp:
      for (unsigned r = 0; r <= n; ++r) out += ParamPoly::term(falling_factorial(n, r), n - r, r);
      return out;
    case FamilyKind::hermite2:
      for (unsigned r = 0; 2 * r <= n; ++r) {
        out += ParamPoly::term(falling_factorial(n, 2 * r) / factorial(r), n - 2 * r, r);
      }
      return out;
    case FamilyKind::trunc_exp2:
      for (unsigned r = 0; 2 * r <= n; ++r) out += ParamPoly::term(falling_factorial(n, 2 * r), n - 2 * r, r);
      return out;
    default:
      break;
  }
  throw UnsupportedError("no symbolic-y form for family " + to_string(family));
}

Poly structural_identity(StructuralId id, FamilyKind family, unsigned n, const Rational& y) {
  const Rational nn(static_cast<std::int64_t>(n));
  auto require = [&](bool ok) {
    if (!ok) throw UnsupportedError(to_string(id) + " does not apply to family " + to_string(family));
  };
  switch (id) {
    case StructuralId::y_recurrence: {
      require(family == FamilyKind::trunc_exp);
      ParamPoly residual = d_dy(symbolic_family(family, n));
      for (unsigned r = 0; r + 1 <= n; ++r) {
        const Poly coeff = Poly::monomial(factorial(n) / factorial(n - 1 - r), r, Var::y);
        residual -= coeff * symbolic_family(family, n - 1 - r);
      }
      return bind_y(residual, y);
    }
    case StructuralId::y_evolution: {
      require(family == FamilyKind::trunc_exp || family == FamilyKind::hermite1);
      // T(s) = A'(s)/A(s) for the base amplitude A(s), then s = y dx.
      const RationalFunction log_deriv =
          family == FamilyKind::trunc_exp
              ? log_derivative(rational_amplitude(AmplitudeSpec(AmplitudeKind::trunc_exp, Rational(1))))
              : RationalFunction(Poly::constant(Rational(1), Var::t));
      const DiffOperator t_of_y(substitute(log_deriv, y, 1));
      const ParamPoly a = symbolic_family(family, n);
      return bind_y(d_dy(a), y) - apply_operator(t_of_y, derivative(bind_y(a, y)));
    }
    case StructuralId::euler_homogeneity: {
      require(family == FamilyKind::trunc_exp || family == FamilyKind::hermite1);
      const ParamPoly a = symbolic_family(family, n);
      const ParamPoly lhs = Poly::monomial(Rational(1), 1, Var::y) * d_dy(a) + times_x(d_dx(a));
      return bind_y(lhs - nn * a, y);
    }
    case StructuralId::trunc_exp2_evolution: {
      require(family == FamilyKind::trunc_exp2);
      const ParamPoly a = symbolic_family(family, n);
      const DiffOperator op(RationalFunction(Poly::monomial(Rational(1), 2, Var::dx),
                                             Poly({Rational(1), Rational(0), -y}, Var::dx)));
      return bind_y(d_dy(a), y) - apply_operator(op, bind_y(a, y));
    }
    case StructuralId::trunc_exp2_operational: {
      require(family == FamilyKind::trunc_exp2);
      const DiffOperator op(RationalFunction(Poly::constant(Rational(1), Var::dx),
                                             Poly({Rational(1), Rational(0), -y}, Var::dx)));
      return bind_y(symbolic_family(family, n), y) - apply_operator(op, x_power(n));
    }
  }
  throw UsageError("unknown structural identity");
}

}  // namespace appell
