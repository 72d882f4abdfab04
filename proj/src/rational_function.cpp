#include "appell/rational_function.hpp"

#include "appell/errors.hpp"

namespace appell {

namespace {

// Scales numerator and denominator so that the denominator has constant term 1.
RationalFunction normalized(Poly num, Poly den) {
  const Rational d0 = den.coefficient(0);
  if (d0.is_zero()) throw NormalizationError("rational function: denominator vanishes at 0");
  const Rational inv = Rational(1) / d0;
  return RationalFunction(num * inv, den * inv);
}

}  // namespace

RationalFunction::RationalFunction(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.var() != den_.var()) throw UsageError("rational function: variable mismatch");
  if (!den_.coefficient(0).is_one()) {
    throw NormalizationError("rational function: denominator constant term must be 1, got " +
                             den_.coefficient(0).to_string());
  }
}

RationalFunction::RationalFunction(Poly numerator)
    : RationalFunction(numerator, Poly::constant(Rational(1), numerator.var())) {}

PowerSeries RationalFunction::expand(std::size_t order) const {
  return multiply(PowerSeries::from_poly(num_, order), series_invert(den_, order));
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) return RationalFunction(num_, Poly::constant(Rational(1), var()));
  const Poly g = gcd(num_, den_);
  if (g.degree() <= 0) return *this;
  return normalized(divmod(num_, g).first, divmod(den_, g).first);
}

RationalFunction RationalFunction::with_var(Var v) const {
  return RationalFunction(num_.with_var(v), den_.with_var(v));
}

Rational evaluate(const RationalFunction& f, const Rational& at) {
  const Rational d = evaluate(f.denominator(), at);
  if (d.is_zero()) throw UsageError("rational function has a pole at " + at.to_string());
  return evaluate(f.numerator(), at) / d;
}

RationalFunction substitute(const RationalFunction& f, const Rational& scale, unsigned power) {
  return RationalFunction(substitute(f.numerator(), scale, power), substitute(f.denominator(), scale, power));
}

RationalFunction derivative(const RationalFunction& f) {
  const Poly& p = f.numerator();
  const Poly& q = f.denominator();
  return RationalFunction(derivative(p) * q - p * derivative(q), q * q);
}

RationalFunction log_derivative(const RationalFunction& f) {
  const Poly& p = f.numerator();
  const Poly& q = f.denominator();
  if (p.coefficient(0).is_zero()) {
    throw NormalizationError("log_derivative: numerator vanishes at 0");
  }
  return normalized(derivative(p) * q - p * derivative(q), p * q).reduced();
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

}  // namespace appell
