#include "appell/power_series.hpp"

#include <algorithm>

#include "appell/errors.hpp"

namespace appell {

PowerSeries::PowerSeries(std::vector<Rational> coefficients, Var var)
    : coeffs_(std::move(coefficients)), var_(var) {
  if (coeffs_.empty()) throw UsageError("power series needs at least one coefficient");
}

PowerSeries PowerSeries::from_poly(const Poly& p, std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = p.coefficient(k);
  return PowerSeries(std::move(c), p.var());
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw UsageError("cannot extend a truncated series");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), var_);
}

std::string PowerSeries::coefficient_list() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].to_string();
  }
  return out;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  if (a.var() != b.var()) throw UsageError("series_mul: variable mismatch");
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(out), a.var());
}

PowerSeries series_invert(const PowerSeries& q, std::size_t order) {
  if (!q[0].is_one()) {
    throw NormalizationError("series_invert: constant term must be 1, got " + q[0].to_string());
  }
  std::vector<Rational> out(order + 1);
  out[0] = Rational(1);
  for (std::size_t r = 1; r <= order; ++r) {
    Rational s;
    const std::size_t top = std::min(r, q.order());
    for (std::size_t j = 1; j <= top; ++j) {
      if (!q[j].is_zero()) s -= q[j] * out[r - j];
    }
    out[r] = std::move(s);
  }
  return PowerSeries(std::move(out), q.var());
}

PowerSeries series_invert(const Poly& q, std::size_t order) {
  if (q.is_zero()) throw NormalizationError("series_invert: constant term must be 1, got 0");
  return series_invert(PowerSeries::from_poly(q, static_cast<std::size_t>(std::max(q.degree(), 0))), order);
}

PowerSeries series_substitute(const PowerSeries& s, const Rational& scale, unsigned power) {
  if (power == 0) throw UsageError("series_substitute: power must be >= 1");
  std::vector<Rational> out(s.order() * power + 1);
  Rational f(1);
  for (std::size_t k = 0; k <= s.order(); ++k) {
    out[k * power] = s[k] * f;
    f *= scale;
  }
  return PowerSeries(std::move(out), s.var());
}

PowerSeries exp_series(const Rational& scale, std::size_t order, Var var) {
  std::vector<Rational> out(order + 1);
  out[0] = Rational(1);
  for (std::size_t k = 1; k <= order; ++k) out[k] = out[k - 1] * scale / Rational(static_cast<std::int64_t>(k));
  return PowerSeries(std::move(out), var);
}

}  // namespace appell
