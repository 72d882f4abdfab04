#pragma once

#include <cstddef>

#include "appell/poly.hpp"
#include "appell/power_series.hpp"

namespace appell {

/// numerator / denominator with denominator(0) == 1. Both polynomials share
/// one indeterminate.
class RationalFunction {
 public:
  /// Throws NormalizationError unless denominator(0) == 1, UsageError on a
  /// variable mismatch.
  RationalFunction(Poly numerator, Poly denominator);
  /// p / 1
  explicit RationalFunction(Poly numerator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  Var var() const { return num_.var(); }

  /// Maclaurin coefficients through `order`.
  PowerSeries expand(std::size_t order) const;
  /// Cancels the common factor of numerator and denominator.
  RationalFunction reduced() const;
  RationalFunction with_var(Var v) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

/// Exact value; throws UsageError when the denominator vanishes there.
Rational evaluate(const RationalFunction& f, const Rational& at);

/// f(scale * v^power).
RationalFunction substitute(const RationalFunction& f, const Rational& scale, unsigned power);

/// (P'Q - PQ') / Q^2
RationalFunction derivative(const RationalFunction& f);

/// f'/f = (P'Q - PQ') / (PQ), reduced. Requires P(0) != 0 (NormalizationError).
RationalFunction log_derivative(const RationalFunction& f);

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

}  // namespace appell
