#include "appell/verify.hpp"

#include <functional>
#include <future>
#include <random>
#include <utility>

#include "appell/errors.hpp"
#include "appell/families.hpp"
#include "appell/operators.hpp"
#include "appell/pade.hpp"
#include "appell/umbral.hpp"

namespace appell::verify {

namespace {

// An empty string means the check passed; anything else describes the failure.
using CheckFn = std::function<std::string()>;

struct Check {
  std::string suite;
  std::string name;
  CheckFn run;
};

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

Poly xpow(unsigned n) { return Poly::monomial(Rational(1), n, Var::x); }

std::string mismatch(const std::string& what, const Poly& got, const Poly& want) {
  return what + ": got [" + got.coefficient_list() + "], want [" + want.coefficient_list() + "]";
}

Rational random_rational(std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(gen), den(gen));
}

Poly random_poly(std::mt19937& gen, int max_degree, Var v = Var::x) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(gen)) + 1);
  for (auto& a : c) a = random_rational(gen);
  return Poly(std::move(c), v);
}

std::vector<AmplitudeSpec> catalog() {
  return {AmplitudeSpec(AmplitudeKind::exp_neg),
          AmplitudeSpec(AmplitudeKind::exp_neg_half_square),
          AmplitudeSpec(AmplitudeKind::trunc_exp, r(1)),
          AmplitudeSpec(AmplitudeKind::trunc_exp, r(-1, 3)),
          AmplitudeSpec(AmplitudeKind::euler),
          AmplitudeSpec(AmplitudeKind::bernoulli),
          AmplitudeSpec(AmplitudeKind::hermite2, r(1, 3))};
}

// The family whose amplitude is exactly the catalog entry.
FamilyId family_of(const AmplitudeSpec& a) {
  switch (a.kind()) {
    case AmplitudeKind::exp_neg: return FamilyId(FamilyKind::hermite1, r(-1));
    case AmplitudeKind::exp_neg_half_square: return FamilyId(FamilyKind::he);
    case AmplitudeKind::trunc_exp: return FamilyId(FamilyKind::trunc_exp, *a.y());
    case AmplitudeKind::euler: return FamilyId(FamilyKind::euler);
    case AmplitudeKind::bernoulli: return FamilyId(FamilyKind::bernoulli);
    case AmplitudeKind::hermite2: return FamilyId(FamilyKind::hermite2, *a.y());
  }
  throw UsageError("unreachable");
}

std::string label(const AmplitudeSpec& a) {
  return a.y() ? to_string(a.kind()) + "(y=" + a.y()->to_string() + ")" : to_string(a.kind());
}

std::vector<FamilyId> appell_families() {
  return {FamilyId(FamilyKind::hermite1, r(-1)), FamilyId(FamilyKind::hermite1, r(2, 3)),
          FamilyId(FamilyKind::hermite2, r(1, 3)), FamilyId(FamilyKind::he),
          FamilyId(FamilyKind::trunc_exp, r(1)),   FamilyId(FamilyKind::trunc_exp, r(-1, 2)),
          FamilyId(FamilyKind::trunc_exp2, r(-1, 4)), FamilyId(FamilyKind::euler),
          FamilyId(FamilyKind::bernoulli)};
}

void add_algebra(std::vector<Check>& out) {
  out.push_back({"algebra", "invert_then_multiply", [] {
    std::mt19937 gen(101);
    for (int trial = 0; trial < 60; ++trial) {
      Poly q = random_poly(gen, 6, Var::t);
      std::vector<Rational> c(q.coefficients().begin(), q.coefficients().end());
      if (c.empty()) c.emplace_back(1);
      c[0] = Rational(1);
      q = Poly(c, Var::t);
      const std::size_t order = static_cast<std::size_t>(trial % 13);
      const PowerSeries prod = multiply(PowerSeries::from_poly(q, order), series_invert(q, order));
      for (std::size_t k = 0; k <= order; ++k) {
        if (prod[k] != Rational(k == 0 ? 1 : 0)) return "q*inv(q) != 1 at order " + std::to_string(k);
      }
    }
    return std::string();
  }});
  out.push_back({"algebra", "derivative_linear_and_product_rule", [] {
    std::mt19937 gen(202);
    for (int trial = 0; trial < 60; ++trial) {
      const Poly p = random_poly(gen, 8);
      const Poly q = random_poly(gen, 8);
      const Rational a = random_rational(gen);
      if (derivative(p * a + q) != derivative(p) * a + derivative(q)) return std::string("linearity failed");
      if (derivative(p * q) != derivative(p) * q + p * derivative(q)) return std::string("product rule failed");
    }
    return std::string();
  }});
}

void add_pade(std::vector<Check>& out) {
  out.push_back({"pade", "known_approximants_of_exponentials", [] {
    const PowerSeries e = maclaurin(AmplitudeSpec(AmplitudeKind::exp_neg), 6);
    auto rf = [](std::vector<Rational> n, std::vector<Rational> d) {
      return RationalFunction(Poly(std::move(n), Var::t), Poly(std::move(d), Var::t));
    };
    const std::vector<std::tuple<std::size_t, std::size_t, RationalFunction>> cases{
        {0, 2, rf({r(1)}, {r(1), r(1), r(1, 2)})},
        {1, 1, rf({r(1), r(-1, 2)}, {r(1), r(1, 2)})},
        {0, 3, rf({r(1)}, {r(1), r(1), r(1, 2), r(1, 6)})},
        {2, 1, rf({r(1), r(-2, 3), r(1, 6)}, {r(1), r(1, 3)})},
    };
    for (const auto& [m, n, want] : cases) {
      if (!(solve_pade(e, m, n).value == want)) return "e^-t [" + std::to_string(m) + "|" + std::to_string(n) + "]";
    }
    const auto g = pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg_half_square), 3, 2).value;
    if (!(g == rf({r(1), 0, r(-3, 10), 0, r(3, 80), 0, r(-1, 480)}, {r(1), 0, r(1, 5), 0, r(1, 80)})))
      return std::string("e^-t^2/2 [3|2]");
    const auto eu = pade_of_amplitude(AmplitudeSpec(AmplitudeKind::euler), 0, 2).value;
    if (!(eu == rf({r(1)}, {r(1), r(1, 2), r(1, 4)}))) return std::string("Euler [0|2]");
    return std::string();
  }});
  out.push_back({"pade", "euler_21_defect", [] {
    try {
      pade_of_amplitude(AmplitudeSpec(AmplitudeKind::euler), 2, 1);
      return std::string("no defect reported");
    } catch (const PadeDefect& d) {
      if (d.order() != 3) return "defect at order " + std::to_string(d.order());
    }
    const int k = agreement_order(euler_21_printed(), maclaurin(AmplitudeSpec(AmplitudeKind::euler), 8));
    return k == 2 ? std::string() : "quoted [2|1] agreement order " + std::to_string(k);
  }});
  out.push_back({"pade", "euler_12_two_constructions", [] {
    const auto direct = pade_of_amplitude(AmplitudeSpec(AmplitudeKind::euler), 1, 2).value;
    return direct == euler_12_from_exponential() ? std::string() : std::string("direct solve differs");
  }});
  out.push_back({"pade", "agreement_at_least_m_plus_n", [] {
    for (const auto& a : catalog()) {
      for (std::size_t m = 0; m <= 5; ++m) {
        for (std::size_t n = 0; m + n <= 5; ++n) {
          try {
            const auto p = pade_of_amplitude(a, m, n);
            const std::size_t want = p.inner_power * (m + n);
            if (agreement_order(p.value, maclaurin(a, want + 4)) < static_cast<int>(want))
              return label(a) + " [" + std::to_string(m) + "|" + std::to_string(n) + "]";
          } catch (const PadeDefect&) {
          }
        }
      }
    }
    return std::string();
  }});
  out.push_back({"pade", "m_0_is_maclaurin_truncation", [] {
    for (const auto& a : catalog()) {
      for (std::size_t m = 0; m <= 6; ++m) {
        const auto p = solve_pade(maclaurin(a, m), m, 0);
        if (!(p.value.numerator() == maclaurin(a, m).to_poly()) || p.value.denominator().degree() != 0)
          return label(a) + " [" + std::to_string(m) + "|0]";
      }
    }
    return std::string();
  }});
  out.push_back({"pade", "0_n_of_exp_neg_is_taylor_of_exp", [] {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto p = pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg), 0, n);
      if (!(p.value.denominator() == exp_series(r(1), n, Var::t).to_poly())) return "n = " + std::to_string(n);
    }
    return std::string();
  }});
}

void add_families(std::vector<Check>& out) {
  out.push_back({"families", "appell_derivative_rule", [] {
    for (const auto& f : appell_families()) {
      for (unsigned n = 1; n <= 10; ++n) {
        if (derivative(exact_polynomial(f, n)) != exact_polynomial(f, n - 1) * Rational(n))
          return f.label() + " n=" + std::to_string(n);
      }
    }
    return std::string();
  }});
  out.push_back({"families", "truncated_exponentials_at_y_zero", [] {
    for (unsigned n = 0; n <= 10; ++n) {
      if (exact_polynomial(FamilyId(FamilyKind::trunc_exp, r(0)), n) != xpow(n)) return "e_" + std::to_string(n);
      if (exact_polynomial(FamilyId(FamilyKind::trunc_exp2, r(0)), n) != xpow(n)) return "e2_" + std::to_string(n);
    }
    return std::string();
  }});
  out.push_back({"families", "hermite1_newton_binomial", [] {
    for (const Rational& y : {r(-1), r(2, 5)}) {
      Poly power = Poly::constant(r(1), Var::x);
      const Poly x_plus_y({y, r(1)}, Var::x);
      for (unsigned n = 0; n <= 10; ++n) {
        if (exact_polynomial(FamilyId(FamilyKind::hermite1, y), n) != power) return "n=" + std::to_string(n);
        power = power * x_plus_y;
      }
    }
    return std::string();
  }});
  out.push_back({"families", "chebyshev_matches_series_inverse", [] {
    const std::vector<std::pair<Rational, Rational>> pairs{
        {r(1, 2), r(1, 8)}, {r(1, 5), r(1, 80)}, {r(1, 2), r(1, 4)}, {r(1, 6), r(1, 12)}, {r(1), r(1, 2)}};
    for (const auto& [a, b] : pairs) {
      const PowerSeries inv = series_invert(Poly({r(1), a, b}, Var::t), 12);
      for (unsigned k = 0; k <= 12; ++k) {
        if (chebyshev_u(k, a, b) != inv[k]) return "U_" + std::to_string(k) + "(" + a.to_string() + "," + b.to_string() + ")";
      }
    }
    return std::string();
  }});
  out.push_back({"families", "generating_function", [] {
    for (const auto& f : appell_families()) {
      if (!generating_check(f, 8)) return f.label();
    }
    return std::string();
  }});
  out.push_back({"families", "bernoulli_numbers_match_amplitude", [] {
    const PowerSeries c = maclaurin(AmplitudeSpec(AmplitudeKind::bernoulli), 14);
    for (unsigned k = 0; k <= 14; ++k) {
      if (bernoulli_number(k) != c[k] * factorial(k)) return "B_" + std::to_string(k);
    }
    return std::string();
  }});
}

void add_theorems(std::vector<Check>& out) {
  out.push_back({"theorems", "exactness_order", [] {
    for (const auto& a : catalog()) {
      const FamilyId f = family_of(a);
      for (std::size_t m = 0; m <= 5; ++m) {
        for (std::size_t n = 0; m + n <= 5; ++n) {
          DiffOperator op = DiffOperator::identity();
          try {
            op = family_operator(f, m, n);
          } catch (const PadeDefect&) {
            continue;
          }
          const int k_max = agreement_order(op.value().with_var(Var::t), maclaurin(a, 16));
          for (unsigned k = 0; k <= 12; ++k) {
            const bool equal = apply_operator(op, xpow(k)) == exact_polynomial(f, k);
            if (equal != (static_cast<int>(k) <= k_max))
              return label(a) + " [" + std::to_string(m) + "|" + std::to_string(n) + "] k=" + std::to_string(k);
          }
        }
      }
    }
    return std::string();
  }});
  const std::vector<std::pair<ClosedForm, std::function<Poly(unsigned)>>> pairs{
      {ClosedForm::hermite1_pade_11,
       [](unsigned n) { return pade_appell(FamilyId(FamilyKind::hermite1, r(-1)), 1, 1, n).value; }},
      {ClosedForm::hermite1_pade_21,
       [](unsigned n) { return pade_appell(FamilyId(FamilyKind::hermite1, r(-1)), 2, 1, n).value; }},
      {ClosedForm::he_pade_11, [](unsigned n) { return pade_appell(FamilyId(FamilyKind::he), 1, 1, n).value; }},
      {ClosedForm::he_pade_02, [](unsigned n) { return pade_appell(FamilyId(FamilyKind::he), 0, 2, n).value; }},
      {ClosedForm::he_pade_32, [](unsigned n) { return pade_appell(FamilyId(FamilyKind::he), 3, 2, n).value; }},
      {ClosedForm::euler_pade_02, [](unsigned n) { return pade_appell(FamilyId(FamilyKind::euler), 0, 2, n).value; }},
      {ClosedForm::euler_pade_21, [](unsigned n) { return apply_operator(DiffOperator(euler_21_printed()), xpow(n)); }},
  };
  for (const auto& [id, route] : pairs) {
    out.push_back({"theorems", "closed_form_" + to_string(id), [id = id, route = route] {
      for (unsigned n = 0; n <= 12; ++n) {
        const Poly got = closed_form(id, n);
        const Poly want = route(n);
        if (got != want) return mismatch("n=" + std::to_string(n), got, want);
      }
      return std::string();
    }});
  }
  out.push_back({"theorems", "euler_12_umbral_vs_operator", [] {
    const DiffOperator op(euler_12_from_exponential());
    for (unsigned n = 0; n <= 12; ++n) {
      const Poly got = umbral_euler(UmbralEulerVariant::one_two, n, r(1, 6), r(1, 12));
      const Poly want = apply_operator(op, xpow(n));
      if (got != want) return mismatch("n=" + std::to_string(n), got, want);
    }
    return std::string();
  }});
  out.push_back({"theorems", "bernoulli_11_closed_form_vs_operator", [] {
    for (unsigned n = 0; n <= 12; ++n) {
      const Poly got = bernoulli_pade_11_closed_form(n);
      const Poly want = umbral_pade_bernoulli(1, 1, n);
      if (got != want) return mismatch("n=" + std::to_string(n), got, want);
    }
    return std::string();
  }});
}

void add_odes(std::vector<Check>& out) {
  out.push_back({"odes", "trunc_exp_second_order", [] {
    for (unsigned n = 0; n <= 10; ++n) {
      if (!ode_residual(OdeId::trunc_exp_second_order, n).is_zero()) return "n=" + std::to_string(n);
    }
    return std::string();
  }});
  out.push_back({"odes", "hermite_pade_third_order", [] {
    for (unsigned n = 0; n <= 10; ++n) {
      if (!ode_residual(OdeId::hermite_pade_third_order, n).is_zero()) return "n=" + std::to_string(n);
    }
    return std::string();
  }});
  out.push_back({"odes", "trunc_exp2_third_order", [] {
    for (const Rational& y : {r(1), r(1, 3), r(-1, 4)}) {
      for (unsigned n = 0; n <= 10; ++n) {
        if (!ode_residual(OdeId::trunc_exp2_third_order, n, y).is_zero())
          return "y=" + y.to_string() + " n=" + std::to_string(n);
      }
    }
    return std::string();
  }});
}

void add_monomiality(std::vector<Check>& out) {
  out.push_back({"monomiality", "theorem_shift_operator", [] {
    const auto a = pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg), 1, 1).value;
    const RationalFunction want(Poly::constant(r(-1), Var::dx), Poly({r(1), r(0), r(-1, 4)}, Var::dx));
    return monomiality_operators(a).shift().value() == want ? std::string() : std::string("shift differs");
  }});
  out.push_back({"monomiality", "raise_lower", [] {
    std::vector<std::pair<std::string, RationalFunction>> amplitudes{
        {"trunc_exp(y=1)", rational_amplitude(AmplitudeSpec(AmplitudeKind::trunc_exp, r(1)))}};
    for (std::size_t m = 0; m <= 5; ++m) {
      for (std::size_t n = 0; m + n <= 5; ++n) {
        amplitudes.emplace_back("e^-t [" + std::to_string(m) + "|" + std::to_string(n) + "]",
                                pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg), m, n).value);
      }
    }
    for (const auto& [name, amp] : amplitudes) {
      const Monomiality ops = monomiality_operators(amp);
      const DiffOperator a(amp);
      for (unsigned n = 0; n <= 10; ++n) {
        const Poly an = apply_operator(a, xpow(n));
        if (ops.raise(ops.lower(an)) != an * Rational(n)) return name + " MP n=" + std::to_string(n);
        if (ops.raise(an) != apply_operator(a, xpow(n + 1))) return name + " M n=" + std::to_string(n);
      }
    }
    return std::string();
  }});
  out.push_back({"monomiality", "operator_ode_identity", [] {
    std::vector<RationalFunction> amplitudes{rational_amplitude(AmplitudeSpec(AmplitudeKind::trunc_exp, r(1))),
                                             rational_amplitude(AmplitudeSpec(AmplitudeKind::trunc_exp, r(-2, 3))),
                                             euler_21_printed(), euler_12_from_exponential()};
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {0, 2}, {3, 2}}) {
      amplitudes.push_back(pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg), m, n).value);
      amplitudes.push_back(pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg_half_square), m, n).value);
    }
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
      for (unsigned n = 0; n <= 8; ++n) {
        if (!monomiality_ode_residual(amplitudes[i], n).is_zero())
          return "amplitude #" + std::to_string(i) + " n=" + std::to_string(n);
      }
    }
    return std::string();
  }});
}

void add_structural(std::vector<Check>& out) {
  const std::vector<Rational> ys{r(1, 2), r(1), r(2), r(-1, 3)};
  out.push_back({"structural", "y_recurrence", [ys] {
    for (const auto& y : ys) {
      for (unsigned n = 0; n <= 10; ++n) {
        if (!structural_identity(StructuralId::y_recurrence, FamilyKind::trunc_exp, n, y).is_zero())
          return "y=" + y.to_string() + " n=" + std::to_string(n);
      }
    }
    return std::string();
  }});
  out.push_back({"structural", "y_evolution", [ys] {
    for (FamilyKind f : {FamilyKind::trunc_exp, FamilyKind::hermite1}) {
      for (const auto& y : ys) {
        for (unsigned n = 0; n <= 8; ++n) {
          if (!structural_identity(StructuralId::y_evolution, f, n, y).is_zero())
            return to_string(f) + " y=" + y.to_string() + " n=" + std::to_string(n);
        }
      }
    }
    return std::string();
  }});
  out.push_back({"structural", "euler_homogeneity", [ys] {
    for (FamilyKind f : {FamilyKind::trunc_exp, FamilyKind::hermite1}) {
      for (const auto& y : ys) {
        for (unsigned n = 0; n <= 10; ++n) {
          if (!structural_identity(StructuralId::euler_homogeneity, f, n, y).is_zero())
            return to_string(f) + " y=" + y.to_string() + " n=" + std::to_string(n);
        }
      }
    }
    return std::string();
  }});
  out.push_back({"structural", "trunc_exp2_operational_and_evolution", [ys] {
    for (const auto& y : ys) {
      for (unsigned n = 0; n <= 10; ++n) {
        if (!structural_identity(StructuralId::trunc_exp2_operational, FamilyKind::trunc_exp2, n, y).is_zero())
          return "operational y=" + y.to_string() + " n=" + std::to_string(n);
        if (!structural_identity(StructuralId::trunc_exp2_evolution, FamilyKind::trunc_exp2, n, y).is_zero())
          return "evolution y=" + y.to_string() + " n=" + std::to_string(n);
      }
    }
    return std::string();
  }});
}

void add_umbral(std::vector<Check>& out) {
  out.push_back({"umbral", "bernoulli_11_exact_through_3", [] {
    for (unsigned n = 0; n <= 3; ++n) {
      const Poly got = umbral_pade_bernoulli(1, 1, n);
      const Poly want = exact_polynomial(FamilyId(FamilyKind::bernoulli), n);
      if (got != want) return mismatch("n=" + std::to_string(n), got, want);
    }
    const Poly diff = umbral_pade_bernoulli(1, 1, 4) - exact_polynomial(FamilyId(FamilyKind::bernoulli), 4);
    return diff == Poly::constant(r(-1, 15), Var::x) ? std::string() : "B_4 gap [" + diff.coefficient_list() + "]";
  }});
  out.push_back({"umbral", "euler_02_exact_through_2", [] {
    for (unsigned n = 0; n <= 2; ++n) {
      if (umbral_euler(UmbralEulerVariant::zero_two, n, r(1, 2), r(1, 4)) != exact_polynomial(FamilyId(FamilyKind::euler), n))
        return "n=" + std::to_string(n);
    }
    const Poly diff = umbral_euler(UmbralEulerVariant::zero_two, 3, r(1, 2), r(1, 4)) -
                      exact_polynomial(FamilyId(FamilyKind::euler), 3);
    return diff == Poly::constant(r(1, 2), Var::x) ? std::string() : "E_3 gap [" + diff.coefficient_list() + "]";
  }});
  out.push_back({"umbral", "euler_02_umbral_vs_operator", [] {
    const std::vector<std::pair<Rational, Rational>> params{{r(1, 2), r(1, 4)}, {r(1, 6), r(1, 12)}, {r(-2, 3), r(5, 7)}};
    for (const auto& [a, b] : params) {
      const DiffOperator op(RationalFunction(Poly::constant(r(1), Var::dx), Poly({r(1), a, b}, Var::dx)));
      for (unsigned n = 0; n <= 10; ++n) {
        if (umbral_euler(UmbralEulerVariant::zero_two, n, a, b) != apply_operator(op, xpow(n)))
          return "(" + a.to_string() + "," + b.to_string() + ") n=" + std::to_string(n);
      }
    }
    return std::string();
  }});
  out.push_back({"umbral", "linearize_is_linear", [] {
    std::mt19937 gen(303);
    const std::vector<MomentFunctional> phis{MomentFunctional::bernoulli(), MomentFunctional::chebyshev(r(1, 2), r(1, 4)),
                                             MomentFunctional::factorial_reciprocal()};
    auto random_umbral = [&gen] {
      UmbralPolynomial u;
      std::uniform_int_distribution<unsigned> power(0, 8);
      for (int i = 0; i < 4; ++i) u.add(power(gen), random_poly(gen, 6));
      return u;
    };
    for (int trial = 0; trial < 40; ++trial) {
      const UmbralPolynomial u = random_umbral();
      const UmbralPolynomial v = random_umbral();
      const Rational c = random_rational(gen);
      for (const auto& phi : phis) {
        if (linearize(u + v, phi) != linearize(u, phi) + linearize(v, phi)) return std::string("additivity");
        if (linearize(c * u, phi) != linearize(u, phi) * c) return std::string("homogeneity");
      }
    }
    return std::string();
  }});
  out.push_back({"umbral", "bessel_matches_j0_through_2k", [] {
    const PowerSeries j0 = j0_series(12);
    for (unsigned k = 1; k <= 6; ++k) {
      const PowerSeries b = bessel_pade_series(k, 12);
      for (std::size_t i = 0; i <= 2 * k; ++i) {
        if (b[i] != j0[i]) return "k=" + std::to_string(k) + " x^" + std::to_string(i);
      }
      if (b[2 * k + 2] == j0[2 * k + 2]) return "k=" + std::to_string(k) + " agrees past x^2k";
    }
    return std::string();
  }});
  out.push_back({"umbral", "bernoulli_order2_direct_sum", [] {
    for (const Rational& y : {r(1), r(-1, 2), r(3, 4)}) {
      for (unsigned n = 0; n <= 10; ++n) {
        std::vector<Rational> c(n + 1);
        for (unsigned k = 0; 2 * k <= n; ++k)
          c[n - 2 * k] = factorial(n) * pow(y, k) * bernoulli_number(k) / (factorial(n - 2 * k) * factorial(k));
        if (bernoulli_order2(n, y) != Poly(c, Var::x)) return "y=" + y.to_string() + " n=" + std::to_string(n);
      }
    }
    return std::string();
  }});
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  add_algebra(out);
  add_pade(out);
  add_families(out);
  add_theorems(out);
  add_odes(out);
  add_monomiality(out);
  add_structural(out);
  add_umbral(out);
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "pade",        "families",   "theorems",
                                              "odes",    "monomiality", "structural", "umbral"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<Check> selected;
  for (auto& c : all_checks()) {
    if (suite == "all" || c.suite == suite) selected.push_back(std::move(c));
  }
  std::vector<std::future<CheckResult>> pending;
  pending.reserve(selected.size());
  for (const auto& c : selected) {
    pending.push_back(std::async(std::launch::async, [&c] {
      CheckResult res{c.suite, c.name, false, {}};
      try {
        res.detail = c.run();
        res.passed = res.detail.empty();
      } catch (const std::exception& e) {
        res.detail = std::string("exception: ") + e.what();
      }
      return res;
    }));
  }
  std::vector<CheckResult> results;
  results.reserve(pending.size());
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace appell::verify
