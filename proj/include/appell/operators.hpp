#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "appell/families.hpp"
#include "appell/pade.hpp"
#include "appell/param_poly.hpp"
#include "appell/rational_function.hpp"

namespace appell {

/// Rational function of d/dx, P(dx)/Q(dx) with Q(0) = 1. On polynomials the
/// inverse of Q is a terminating Neumann series, so application is exact.
class DiffOperator {
 public:
  /// Relabels the function's indeterminate as dx.
  explicit DiffOperator(const RationalFunction& f);

  static DiffOperator identity();

  const RationalFunction& value() const { return value_; }

 private:
  RationalFunction value_;
};

/// P(dx) [Q(dx)^-1 f], with Q^-1 expanded only as far as deg f.
Poly apply_operator(const DiffOperator& op, const Poly& f);

/// The Padé image of a family amplitude, as an operator in dx.
DiffOperator family_operator(const FamilyId& family, std::size_t m, std::size_t n);

struct ApproximatedPolynomial {
  FamilyId family;
  std::size_t m = 0;
  std::size_t n = 0;
  unsigned index = 0;
  Poly value;
};

/// [m|n] approximant of the family's index-th member: the Padé image of its
/// amplitude applied to x^index. Propagates PadeDefect.
ApproximatedPolynomial pade_appell(const FamilyId& family, std::size_t m, std::size_t n, unsigned index);

/// Closed-form right-hand sides of the explicit representations of the
/// Padé-approximated families, evaluated from the exact building blocks.
enum class ClosedForm {
  hermite1_pade_11,   ///< e_n(x,-1/2) - (n/2) e_{n-1}(x,-1/2)
  hermite1_pade_21,   ///< e_n(x,-1/3) - (2n/3) e_{n-1} + n(n-1)/6 e_{n-2}
  he_pade_11,         ///< e2_n(x,-1/4) - n(n-1)/4 e2_{n-2}(x,-1/4)
  he_pade_02,         ///< n! sum U_r(1/2,1/8) x^(n-2r)/(n-2r)!
  he_pade_32,         ///< d_n - 3/10 n!/(n-2)! d_{n-2} + 3/80 n!/(n-4)! d_{n-4} - 1/480 n!/(n-6)! d_{n-6}
  euler_pade_02,      ///< n! sum U_r(1/2,1/4) x^(n-r)/(n-r)!
  euler_pade_21,      ///< e_n - 5n/12 e_{n-1} - n(n-1)/24 e_{n-2}, all at y = -1/12
  euler_pade_21_as_printed,  ///< same with the last term taken from e2_{n-2}; kept to document the mismatch
};

std::string to_string(ClosedForm id);
ClosedForm parse_closed_form(std::string_view name);

Poly closed_form(ClosedForm id, unsigned n);

/// Quasi-monomiality operators of a rational amplitude A:
/// lowering P = dx and raising M = x + A'(dx)/A(dx).
class Monomiality {
 public:
  explicit Monomiality(const RationalFunction& amplitude);

  const DiffOperator& shift() const { return shift_; }
  Poly lower(const Poly& f) const;
  Poly raise(const Poly& f) const;

 private:
  DiffOperator shift_;
};

Monomiality monomiality_operators(const RationalFunction& amplitude);

/// [A(dx) x + A'(dx)] dx a_n - n A(dx) a_n for a_n = A(dx) x^n.
Poly monomiality_ode_residual(const RationalFunction& amplitude, unsigned n);

enum class OdeId {
  trunc_exp_second_order,    ///< x e_n'' - (x+n) e_n' + n e_n, e_n = e_n(x,1)
  hermite_pade_third_order,  ///< x z''' + (2-n) z'' + 4(1-x) z' + 4n z, z_n = [1|1]H_n^(1)(x,-1)
  trunc_exp2_third_order,    ///< y x Z''' - n y Z'' - x Z' + n Z, Z = e2_n(x,y)
};

std::string to_string(OdeId id);

/// Left side minus right side; the zero polynomial certifies the equation.
/// `y` is required for trunc_exp2_third_order.
Poly ode_residual(OdeId id, unsigned n, const std::optional<Rational>& y = std::nullopt);

enum class StructuralId {
  y_recurrence,           ///< d/dy e_n - sum_r n! y^r/(n-1-r)! e_{n-1-r}
  y_evolution,            ///< d/dy a_n - T(y) d/dx a_n, T(y) = A'(y dx)/A(y dx)
  euler_homogeneity,      ///< (y d/dy + x d/dx) a_n - n a_n
  trunc_exp2_evolution,   ///< d/dy e2_n - dx^2/(1 - y dx^2) e2_n
  trunc_exp2_operational, ///< e2_n - 1/(1 - y dx^2) x^n
};

std::string to_string(StructuralId id);

/// Residual of a parameter identity, computed with y kept symbolic and bound
/// to `y` at the end. UnsupportedError for families outside the identity's
/// class.
Poly structural_identity(StructuralId id, FamilyKind family, unsigned n, const Rational& y);

/// a_n(x,y) with y symbolic, for hermite1, hermite2, trunc_exp, trunc_exp2.
ParamPoly symbolic_family(FamilyKind family, unsigned n);

}  // namespace appell
