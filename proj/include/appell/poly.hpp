#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// Which indeterminate a polynomial or series is written in. Keeping these
/// apart stops a generating-function variable from being applied as a
/// differential operator by accident.
enum class Var { x, t, dx, y };

std::string to_string(Var v);

/// Dense univariate polynomial over Rational, coefficients in ascending
/// powers. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(Var var = Var::x) : var_(var) {}
  Poly(std::vector<Rational> coefficients, Var var);

  static Poly constant(const Rational& c, Var var);
  static Poly monomial(const Rational& c, std::size_t power, Var var);

  Var var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Coefficient of var^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;

  /// Same coefficients, relabelled indeterminate.
  Poly with_var(Var var) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
  friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  /// "c0,c1,...,cn" with exact p/q entries; "0" for the zero polynomial.
  std::string coefficient_list() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
  Var var_;
};

/// Formal derivative: sum a_r v^r -> sum r a_r v^(r-1).
Poly derivative(const Poly& p);
/// k-th formal derivative.
Poly derivative(const Poly& p, unsigned k);
/// Horner evaluation.
Rational evaluate(const Poly& p, const Rational& at);
/// p(scale * v^power).
Poly substitute(const Poly& p, const Rational& scale, unsigned power);
/// v * p.
Poly shift_up(const Poly& p, unsigned k = 1);

/// Euclidean division; throws UsageError when the divisor is zero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
/// Monic greatest common divisor (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace appell
