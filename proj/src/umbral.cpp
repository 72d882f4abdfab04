#include "appell/umbral.hpp"

#include "appell/errors.hpp"
#include "appell/families.hpp"
#include "appell/pade.hpp"

namespace appell {

MomentFunctional MomentFunctional::bernoulli() { return MomentFunctional(Kind::bernoulli, Rational(0), Rational(0)); }

MomentFunctional MomentFunctional::chebyshev(Rational a, Rational b) {
  return MomentFunctional(Kind::chebyshev, std::move(a), std::move(b));
}

MomentFunctional MomentFunctional::factorial_reciprocal() {
  return MomentFunctional(Kind::factorial_reciprocal, Rational(0), Rational(0));
}

Rational MomentFunctional::operator()(unsigned r) const {
  switch (kind_) {
    case Kind::bernoulli: return bernoulli_number(r);
    case Kind::chebyshev: return chebyshev_u(r, a_, b_);
    case Kind::factorial_reciprocal: return Rational(1) / factorial(r);
  }
  return Rational(0);
}

void UmbralPolynomial::add(unsigned power, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UmbralPolynomial& UmbralPolynomial::operator+=(const UmbralPolynomial& rhs) {
  for (const auto& [r, p] : rhs.terms_) add(r, p);
  return *this;
}

UmbralPolynomial operator*(const Rational& c, const UmbralPolynomial& u) {
  UmbralPolynomial out;
  for (const auto& [r, p] : u.terms()) out.add(r, p * c);
  return out;
}

Poly linearize(const UmbralPolynomial& u, const MomentFunctional& phi) {
  Poly out(Var::x);
  for (const auto& [r, p] : u.terms()) out += p * phi(r);
  return out;
}

namespace {

// e_n(x, scale * umbra) = n! sum_r scale^r umbra^r x^(n-r)/(n-r)!, shifted by
// `extra` umbra powers.
UmbralPolynomial umbral_trunc_exp(unsigned n, const Rational& scale, unsigned extra = 0) {
  UmbralPolynomial out;
  Rational s(1);
  for (unsigned r = 0; r <= n; ++r) {
    out.add(r + extra, Poly::monomial(falling_factorial(n, r) * s, n - r, Var::x));
    s *= scale;
  }
  return out;
}

}  // namespace

Poly umbral_pade_bernoulli(std::size_t m, std::size_t n, unsigned index) {
  // [m|n] of e^v, each v^k carrying B^k dx^k.
  const PadeApproximant e = solve_pade(exp_series(Rational(1), m + n, Var::t), m, n);
  const PowerSeries p = e.value.expand(index);
  UmbralPolynomial u;
  for (unsigned k = 0; k <= index; ++k) {
    u.add(k, Poly::monomial(p[k] * falling_factorial(index, k), index - k, Var::x));
  }
  return linearize(u, MomentFunctional::bernoulli());
}

Poly bernoulli_pade_11_closed_form(unsigned index) {
  UmbralPolynomial u = umbral_trunc_exp(index, Rational(1, 2));
  if (index > 0) {
    u += Rational(static_cast<std::int64_t>(index), 2) * umbral_trunc_exp(index - 1, Rational(1, 2), 1);
  }
  return linearize(u, MomentFunctional::bernoulli());
}

Poly umbral_euler(UmbralEulerVariant variant, unsigned index, const Rational& a, const Rational& b) {
  const MomentFunctional phi = MomentFunctional::chebyshev(a, b);
  switch (variant) {
    case UmbralEulerVariant::zero_two:
      return linearize(umbral_trunc_exp(index, Rational(1)), phi);
    case UmbralEulerVariant::one_two: {
      if (a != Rational(1, 6) || b != Rational(1, 12)) {
        throw UsageError("umbral_euler: the [1|2] representation holds only for (a,b) = (1/6,1/12)");
      }
      UmbralPolynomial u = umbral_trunc_exp(index, Rational(1));
      if (index > 0) u += Rational(-static_cast<std::int64_t>(index), 3) * umbral_trunc_exp(index - 1, Rational(1));
      return linearize(u, phi);
    }
  }
  throw UsageError("unknown umbral Euler variant");
}

Poly bernoulli_order2(unsigned n, const Rational& y) {
  UmbralPolynomial u;
  Rational yr(1);
  for (unsigned r = 0; 2 * r <= n; ++r) {
    u.add(r, Poly::monomial(falling_factorial(n, 2 * r) * yr / factorial(r), n - 2 * r, Var::x));
    yr *= y;
  }
  return linearize(u, MomentFunctional::bernoulli());
}

PowerSeries bessel_pade_series(unsigned k, std::size_t terms) {
  if (k == 0) throw UsageError("bessel_pade_series: denominator order must be >= 1");
  // [0|k] of e^(-u) is 1 over the degree-k Taylor polynomial of e^u.
  const Poly taylor = exp_series(Rational(1), k, Var::x).to_poly();
  const PowerSeries v = series_invert(taylor, terms);
  const MomentFunctional c = MomentFunctional::factorial_reciprocal();
  std::vector<Rational> out(2 * terms + 1);
  Rational quarter_power(1);
  for (std::size_t r = 0; r <= terms; ++r) {
    out[2 * r] = v[r] * quarter_power * c(static_cast<unsigned>(r));
    quarter_power *= Rational(1, 4);
  }
  return PowerSeries(std::move(out), Var::x);
}

PowerSeries j0_series(std::size_t terms) {
  std::vector<Rational> out(2 * terms + 1);
  Rational c(1);
  for (std::size_t r = 0; r <= terms; ++r) {
    out[2 * r] = c;
    const auto next = static_cast<std::int64_t>(r + 1);
    c *= Rational(-1, 4) / Rational(next * next);
  }
  return PowerSeries(std::move(out), Var::x);
}

}  // namespace appell
