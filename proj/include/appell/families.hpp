#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "appell/pade.hpp"
#include "appell/poly.hpp"
#include "appell/power_series.hpp"

namespace appell {

enum class FamilyKind {
  hermite1,    ///< H_n^(1)(x,y) = (x+y)^n
  hermite2,    ///< H_n^(2)(x,y), amplitude e^(y t^2)
  he,          ///< He_n(x) = H_n^(2)(x,-1/2)
  trunc_exp,   ///< e_n(x,y), amplitude 1/(1 - y t)
  trunc_exp2,  ///< e_n^(2)(x,y), amplitude 1/(1 - y t^2)
  chebyshev2,  ///< U_n(x,y), coefficients of 1/(1 + x t + y t^2)
  euler,       ///< E_n(x), amplitude 2/(e^t + 1)
  bernoulli,   ///< B_n(x), amplitude t/(e^t - 1)
};

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);
bool family_takes_y(FamilyKind kind);

class FamilyId {
 public:
  /// Throws UsageError when y is missing for a two-variable family or
  /// supplied for a one-variable one.
  explicit FamilyId(FamilyKind kind, std::optional<Rational> y = std::nullopt);

  FamilyKind kind() const { return kind_; }
  const std::optional<Rational>& y() const { return y_; }
  std::string label() const;

 private:
  FamilyKind kind_;
  std::optional<Rational> y_;
};

/// A family's amplitude written as base(scale * t^power) with `base` from
/// the catalog.
struct AmplitudeImage {
  AmplitudeSpec base;
  Rational scale{1};
  unsigned power = 1;
};

/// UnsupportedError for chebyshev2, which is not an Appell family.
AmplitudeImage family_amplitude(const FamilyId& f);
/// Maclaurin coefficients of the family amplitude through t^order.
PowerSeries family_amplitude_series(const FamilyId& f, std::size_t order);

/// The exact degree-n member of the family as a polynomial in x.
Poly exact_polynomial(const FamilyId& f, unsigned n);

/// a_n(x) = sum_k n!/(n-k)! c_k x^(n-k) for amplitude coefficients c_k
/// (needs c.order() >= n).
Poly appell_from_series(const PowerSeries& c, unsigned n);

/// U_r(a,b): coefficient of t^r in 1/(1 + a t + b t^2).
Rational chebyshev_u(unsigned r, const Rational& a, const Rational& b);

/// B_r with B_1 = -1/2.
Rational bernoulli_number(unsigned r);

/// True iff sum_n t^n/n! a_n(x) equals A(t) e^(xt) coefficient by coefficient
/// through t^order. UnsupportedError for chebyshev2.
bool generating_check(const FamilyId& f, std::size_t order);

/// Growable cache of Bernoulli numbers or Chebyshev values U_r(a,b).
/// Not synchronized: callers share one instance only under their own lock.
class NumberSequence {
 public:
  enum class Kind { bernoulli_numbers, chebyshev_values };

  static NumberSequence bernoulli();
  static NumberSequence chebyshev(Rational a, Rational b);

  Kind kind() const { return kind_; }
  const Rational& at(unsigned r);
  std::size_t cached() const { return values_.size(); }

 private:
  NumberSequence(Kind kind, Rational a, Rational b);
  void extend_to(unsigned r);

  Kind kind_;
  Rational a_;
  Rational b_;
  std::vector<Rational> values_;
};

}  // namespace appell
