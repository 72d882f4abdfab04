#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "appell/poly.hpp"
#include "appell/rational.hpp"

namespace appell {

/// Truncated power series: the coefficients of v^0 ... v^order, nothing known
/// beyond. The truncation order travels with every value.
class PowerSeries {
 public:
  /// Throws UsageError when `coefficients` is empty.
  PowerSeries(std::vector<Rational> coefficients, Var var);

  /// Truncation of a polynomial (zero-padded) to the given order.
  static PowerSeries from_poly(const Poly& p, std::size_t order);

  Var var() const { return var_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Same series cut at a lower order.
  PowerSeries truncated(std::size_t order) const;
  /// The known part as a polynomial.
  Poly to_poly() const { return Poly(coeffs_, var_); }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  std::string coefficient_list() const;

 private:
  std::vector<Rational> coeffs_;
  Var var_;
};

/// Cauchy product, truncated at the smaller of the two orders.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

/// First order+1 coefficients of 1/q. Requires q(0) == 1 (NormalizationError).
PowerSeries series_invert(const Poly& q, std::size_t order);
PowerSeries series_invert(const PowerSeries& q, std::size_t order);

/// s(scale * v^power); output order is s.order() * power.
PowerSeries series_substitute(const PowerSeries& s, const Rational& scale, unsigned power);

/// The series of exp(scale * v) through the given order.
PowerSeries exp_series(const Rational& scale, std::size_t order, Var var);

}  // namespace appell
