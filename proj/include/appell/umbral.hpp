#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "appell/poly.hpp"
#include "appell/power_series.hpp"

namespace appell {

/// Projects powers of an umbra to numbers: r -> phi(r).
class MomentFunctional {
 public:
  enum class Kind {
    bernoulli,             ///< B^r -> B_r
    chebyshev,             ///< u^r -> U_r(a,b)
    factorial_reciprocal,  ///< c^r -> 1/r!
  };

  static MomentFunctional bernoulli();
  static MomentFunctional chebyshev(Rational a, Rational b);
  static MomentFunctional factorial_reciprocal();

  Kind kind() const { return kind_; }
  Rational operator()(unsigned r) const;

 private:
  MomentFunctional(Kind kind, Rational a, Rational b) : kind_(kind), a_(std::move(a)), b_(std::move(b)) {}

  Kind kind_;
  Rational a_;
  Rational b_;
};

/// sum_r umbra^r * terms[r](x). The umbra is an ordinary commuting symbol
/// until linearize() projects it.
class UmbralPolynomial {
 public:
  UmbralPolynomial() = default;

  /// Adds umbra^power * p.
  void add(unsigned power, const Poly& p);

  const std::map<unsigned, Poly>& terms() const { return terms_; }

  UmbralPolynomial& operator+=(const UmbralPolynomial& rhs);
  friend UmbralPolynomial operator+(UmbralPolynomial a, const UmbralPolynomial& b) { return a += b; }
  friend UmbralPolynomial operator*(const Rational& c, const UmbralPolynomial& u);

 private:
  std::map<unsigned, Poly> terms_;
};

/// sum_r phi(r) terms[r]
Poly linearize(const UmbralPolynomial& u, const MomentFunctional& phi);

/// [m|n] approximant of B_n(x) through the exponential umbral image
/// t/(e^t-1) = e^(B t): the Padé of e^v with v -> B dx, expanded on x^index
/// and projected with B^r -> B_r. Propagates PadeDefect.
Poly umbral_pade_bernoulli(std::size_t m, std::size_t n, unsigned index);

/// The same [1|1] polynomial assembled from its closed form
/// e_n(x, B/2) + (n/2) B e_{n-1}(x, B/2), then projected.
Poly bernoulli_pade_11_closed_form(unsigned index);

enum class UmbralEulerVariant {
  zero_two,  ///< n! sum_r U_r(a,b) x^(n-r)/(n-r)! = e_n(x,u)
  one_two,   ///< e_n(x,u) - (n/3) e_{n-1}(x,u), needs (a,b) = (1/6,1/12)
};

/// Umbral images of the Padé-approximated Euler polynomials with u^r -> U_r(a,b).
/// UsageError when the one_two variant is asked for other parameters.
Poly umbral_euler(UmbralEulerVariant variant, unsigned index, const Rational& a, const Rational& b);

/// B_n^(2)(x,y) = H_n^(2)(x, y B) projected with B^r -> B_r.
Poly bernoulli_order2(unsigned n, const Rational& y);

/// Enough terms for the Bessel series to converge in double precision for
/// |x| <= 8 at every denominator order used here.
inline constexpr std::size_t kDefaultBesselTerms = 100;

/// Even power series in x of the umbral [0|k] approximant of J_0: the
/// coefficient of x^(2r) is V_r/(4^r r!) where V_r are the coefficients of
/// 1/(1 + u + ... + u^k/k!). Returned order is 2*terms. Requires k >= 1.
PowerSeries bessel_pade_series(unsigned k, std::size_t terms = kDefaultBesselTerms);

/// J_0(x) = sum_r (-1)^r (x/2)^(2r)/(r!)^2 through x^(2*terms).
PowerSeries j0_series(std::size_t terms);

}  // namespace appell
