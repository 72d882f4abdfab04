#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "appell/power_series.hpp"
#include "appell/rational_function.hpp"

namespace appell {

/// The closed catalog of generating-function amplitudes A(t).
enum class AmplitudeKind {
  exp_neg,              ///< e^(-t)
  exp_neg_half_square,  ///< e^(-t^2/2)
  trunc_exp,            ///< 1/(1 - y t)
  euler,                ///< 2/(e^t + 1)
  bernoulli,            ///< t/(e^t - 1)
  hermite2,             ///< e^(y t^2)
};

std::string to_string(AmplitudeKind kind);
/// Throws UsageError on an unknown name.
AmplitudeKind parse_amplitude_kind(std::string_view name);
bool amplitude_takes_y(AmplitudeKind kind);

/// An amplitude with its parameter bound. `y` is present exactly when the
/// kind needs it.
class AmplitudeSpec {
 public:
  /// Throws UsageError if `y` is missing for trunc_exp/hermite2 or given for
  /// any other kind.
  explicit AmplitudeSpec(AmplitudeKind kind, std::optional<Rational> y = std::nullopt);

  AmplitudeKind kind() const { return kind_; }
  const std::optional<Rational>& y() const { return y_; }

 private:
  AmplitudeKind kind_;
  std::optional<Rational> y_;
};

/// Exact Maclaurin coefficients c_0..c_order in t.
PowerSeries maclaurin(const AmplitudeSpec& a, std::size_t order);

/// Exact rational form of an amplitude that is already rational
/// (trunc_exp); UnsupportedError for the transcendental kinds.
RationalFunction rational_amplitude(const AmplitudeSpec& a);

/// [m|n] Padé approximant. `value` is in the series variable; when
/// `inner_power` is 2 the orders m, n count powers of an inner variable
/// u ~ t^2, so deg(numerator) <= 2m and deg(denominator) <= 2n.
struct PadeApproximant {
  std::size_t m = 0;
  std::size_t n = 0;
  unsigned inner_power = 1;
  RationalFunction value;
};

/// Solves sum_{j<=k} c_j b_{k-j} = a_k (k = 0..m+n, a_k = 0 for k > m,
/// b_0 = 1) exactly by fraction-free elimination. Consistent singular systems
/// are resolved to the unique reduced rational function; an inconsistent one
/// throws PadeDefect naming the first order that cannot be matched.
/// Requires c.order() >= m+n (UsageError).
PadeApproximant solve_pade(const PowerSeries& c, std::size_t m, std::size_t n);

/// Padé approximant of a catalog amplitude. Even amplitudes are solved in
/// u (e^(-u)) and mapped back through u = t^2/2 or u = -y t^2.
PadeApproximant pade_of_amplitude(const AmplitudeSpec& a, std::size_t m, std::size_t n);

/// Largest k <= c.order() such that f's expansion matches c through v^k;
/// -1 when even the constant terms differ.
int agreement_order(const RationalFunction& f, const PowerSeries& c);

/// The commonly quoted [2|1] Euler-amplitude operator
/// (1 - 5t/12 - t^2/24)/(1 + t/12). It is not a Padé approximant
/// (the [2|1] entry is defective) and matches the amplitude only through t^2.
RationalFunction euler_21_printed();

/// [1|2] Euler operator built from the [2|1] Padé of e^t inserted into
/// 2/(e^t + 1): (1 - t/3)/(1 + t/6 + t^2/12).
RationalFunction euler_12_from_exponential();

}  // namespace appell
