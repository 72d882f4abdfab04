#include <random>

#include "doctest.h"

#include "appell/errors.hpp"
#include "appell/param_poly.hpp"
#include "appell/poly.hpp"
#include "appell/power_series.hpp"
#include "appell/rational.hpp"
#include "appell/rational_function.hpp"

using namespace appell;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 15);
    return Rational(num(rng), den(rng));
  }
  Rational nonzero() {
    Rational r = rational();
    while (r == Rational(0)) r = rational();
    return r;
  }
  Poly poly(int max_degree, Var v = Var::x) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& a : c) a = rational();
    return Poly(c, v);
  }
  Poly normalized(int max_degree, Var v = Var::t) {
    Poly p = poly(max_degree, v);
    std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
    if (c.empty()) c.emplace_back(1);
    c[0] = Rational(1);
    return Poly(c, v);
  }
};

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(q(6, -4).to_string() == "-3/2");
  CHECK(q(0, 7).to_string() == "0");
  CHECK(q(0, 7) == q(0, 1));
  CHECK(q(10, 5).to_string() == "2");
  CHECK(Rational::parse("-12/18") == q(-2, 3));
  CHECK(Rational::parse("7") == q(7));
  CHECK_THROWS_AS(Rational(1, 0), UsageError);
  CHECK_THROWS_AS(Rational::parse("1/0"), UsageError);
  CHECK_THROWS_AS(Rational::parse("abc"), UsageError);
  CHECK_THROWS_AS(Rational::parse(""), UsageError);
  CHECK_THROWS_AS(q(1) / q(0), UsageError);
}

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(1, 2) - q(1, 3) == q(1, 6));
  CHECK(q(2, 3) * q(9, 4) == q(3, 2));
  CHECK(q(2, 3) / q(4, 9) == q(3, 2));
  CHECK(q(-1, 2) < q(1, 3));
  CHECK(pow(q(-2, 3), 3) == q(-8, 27));
  CHECK(factorial(10) == q(3628800));
  CHECK(falling_factorial(6, 3) == q(120));
  CHECK(falling_factorial(3, 5) == q(0));
  CHECK(binomial(10, 4) == q(210));
  CHECK(abs(q(-5, 7)) == q(5, 7));
}

TEST_CASE("rational to double rounds once") {
  CHECK(q(1, 3).to_double() == 1.0 / 3.0);
  CHECK(q(2, 5).to_double() == 0.4);
  // 2^60+1 over 2^60: naive num/den division in double would give exactly 1 twice-rounded.
  const Rational big(mpz_class("1152921504606846977"), mpz_class("1152921504606846976"));
  CHECK(big.to_double() == 1.0);
  const Rational third_big(mpz_class("100000000000000000000000000001"), mpz_class("300000000000000000000000000000"));
  CHECK(third_big.to_double() == 1.0 / 3.0);
}

TEST_CASE("poly basics") {
  const Poly p({q(1), q(-2), q(0), q(0)}, Var::x);
  CHECK(p.degree() == 1);
  CHECK(Poly({}, Var::x).degree() == -1);
  CHECK(Poly({}, Var::x).coefficient_list() == "0");
  CHECK(p.coefficient(5) == q(0));
  CHECK(p.coefficient_list() == "1,-2");
  CHECK(evaluate(p, q(1, 2)) == q(0));
  CHECK(derivative(Poly({q(0), q(0), q(0), q(1)}, Var::x)) == Poly({q(0), q(0), q(3)}, Var::x));
  CHECK(derivative(Poly({q(5)}, Var::x)).degree() == -1);
  CHECK(substitute(Poly({q(1), q(1)}, Var::t), q(1, 2), 2) == Poly({q(1), q(0), q(1, 2)}, Var::t));
  CHECK_THROWS_AS(Poly::constant(q(1), Var::x) + Poly::constant(q(1), Var::t), UsageError);
}

TEST_CASE("poly division and gcd") {
  const Poly a({q(-1), q(0), q(1)}, Var::x);  // x^2 - 1
  const Poly b({q(1), q(1)}, Var::x);         // x + 1
  const auto [quo, rem] = divmod(a, b);
  CHECK(quo == Poly({q(-1), q(1)}, Var::x));
  CHECK(rem.degree() == -1);
  CHECK(gcd(a * Poly({q(2), q(1)}, Var::x), b * Poly({q(2), q(1)}, Var::x) * q(3)) ==
        Poly({q(2), q(3), q(1)}, Var::x));
}

TEST_CASE("power series") {
  CHECK_THROWS_AS(PowerSeries({}, Var::t), UsageError);
  const PowerSeries e = exp_series(q(1), 4, Var::t);
  CHECK(e.order() == 4);
  CHECK(e.coefficient_list() == "1,1,1/2,1/6,1/24");
  const PowerSeries inv = series_invert(Poly({q(1), q(1), q(1, 2)}, Var::t), 4);
  CHECK(inv.coefficient_list() == "1,-1,1/2,0,-1/4");
  CHECK_THROWS_AS(series_invert(Poly({q(2), q(1)}, Var::t), 3), NormalizationError);
  CHECK_THROWS_AS(series_invert(Poly({}, Var::t), 3), NormalizationError);
  CHECK(multiply(e, PowerSeries::from_poly(Poly({q(1)}, Var::t), 2)).order() == 2);
  CHECK(series_substitute(e, q(-1, 2), 2).coefficient_list() == "1,0,-1/2,0,1/8,0,-1/48,0,1/384");
}

TEST_CASE("rational function") {
  CHECK_THROWS_AS(RationalFunction(Poly({q(1)}, Var::t), Poly({q(2), q(1)}, Var::t)), NormalizationError);
  const RationalFunction f(Poly({q(1), q(-1, 2)}, Var::t), Poly({q(1), q(1, 2)}, Var::t));
  CHECK(f.expand(4).coefficient_list() == "1,-1,1/2,-1/4,1/8");
  CHECK(evaluate(f, q(2)) == q(0));
  const RationalFunction g(Poly({q(1), q(-1)}, Var::t) * Poly({q(1), q(2)}, Var::t),
                           Poly({q(1), q(-1)}, Var::t) * Poly({q(1), q(3)}, Var::t));
  const RationalFunction r = g.reduced();
  CHECK(r.numerator() == Poly({q(1), q(2)}, Var::t));
  CHECK(r.denominator() == Poly({q(1), q(3)}, Var::t));
  // d/dt log(1/(1 - t)) = 1/(1 - t)
  const RationalFunction amp(Poly({q(1)}, Var::t), Poly({q(1), q(-1)}, Var::t));
  CHECK(log_derivative(amp) == amp);
}

TEST_CASE("param poly derivatives") {
  // x^2 y^3 + 2 x
  const ParamPoly p = ParamPoly::term(q(1), 2, 3) + ParamPoly::term(q(2), 1, 0);
  CHECK(bind_y(d_dx(p), q(2)) == Poly({q(2), q(16)}, Var::x));
  CHECK(bind_y(d_dy(p), q(2)) == Poly({q(0), q(0), q(12)}, Var::x));
  CHECK(bind_y(times_x(p), q(1)) == Poly({q(0), q(0), q(2), q(1)}, Var::x));
}

TEST_CASE("property: field axioms on random rationals") {
  Gen g(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = g.rational(), b = g.rational(), c = g.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    const Rational d = g.nonzero();
    CHECK((a / d) * d == a);
    CHECK(Rational::parse(a.to_string()) == a);
  }
}

TEST_CASE("property: polynomial ring and derivative") {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Poly a = g.poly(8), b = g.poly(8), c = g.poly(8);
    const Rational s = g.rational();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(derivative(a * s + b) == derivative(a) * s + derivative(b));
    CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
    CHECK(evaluate(a * b, s) == evaluate(a, s) * evaluate(b, s));
    if (b.degree() >= 0) {
      const auto [quo, rem] = divmod(a, b);
      CHECK(quo * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }
}

TEST_CASE("property: series inverse") {
  Gen g(13);
  for (int i = 0; i < 200; ++i) {
    const Poly p = g.normalized(6);
    const std::size_t order = static_cast<std::size_t>(i % 15);
    const PowerSeries prod = multiply(PowerSeries::from_poly(p, order), series_invert(p, order));
    for (std::size_t k = 0; k <= order; ++k) CHECK(prod[k] == Rational(k == 0 ? 1 : 0));
  }
}

TEST_CASE("property: rational function expansion and reduction") {
  Gen g(17);
  for (int i = 0; i < 100; ++i) {
    const Poly num = g.poly(4, Var::t);
    const Poly den = g.normalized(4);
    const Poly common = g.normalized(2);
    const RationalFunction f(num, den);
    const RationalFunction h(num * common, den * common);
    CHECK(f.expand(10).coefficient_list() == h.expand(10).coefficient_list());
    CHECK(h.reduced().denominator().degree() <= den.degree());
    const Rational at = g.rational();
    if (evaluate(den, at) != Rational(0) && evaluate(common, at) != Rational(0)) {
      CHECK(evaluate(h, at) == evaluate(f, at));
    }
  }
}
