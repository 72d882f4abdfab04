#pragma once

#include <cstddef>
#include <vector>

#include "appell/poly.hpp"

namespace appell {

/// Polynomial in x whose coefficients are polynomials in a parameter y.
/// Only used where an identity differentiates with respect to y; everywhere
/// else y is bound to a Rational first.
class ParamPoly {
 public:
  ParamPoly() = default;
  /// coefficients[k] multiplies x^k; each must be a Var::y polynomial.
  explicit ParamPoly(std::vector<Poly> coefficients);

  /// c * x^i * y^j
  static ParamPoly term(const Rational& c, std::size_t x_power, std::size_t y_power);

  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Poly>& coefficients() const { return coeffs_; }
  Poly coefficient(std::size_t x_power) const;

  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const Rational& c, const ParamPoly& p);
  /// Multiplication by a polynomial in y alone.
  friend ParamPoly operator*(const Poly& y_poly, const ParamPoly& p);

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Poly> coeffs_;
};

ParamPoly d_dx(const ParamPoly& p);
ParamPoly d_dy(const ParamPoly& p);
/// x * p
ParamPoly times_x(const ParamPoly& p);
/// Binds y, giving a polynomial in x.
Poly bind_y(const ParamPoly& p, const Rational& y);

}  // namespace appell
