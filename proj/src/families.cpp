#include "appell/families.hpp"

#include <array>
#include <utility>

#include "appell/errors.hpp"

namespace appell {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 8> kFamilyNames{{
    {FamilyKind::hermite1, "hermite1"},
    {FamilyKind::hermite2, "hermite2"},
    {FamilyKind::he, "he"},
    {FamilyKind::trunc_exp, "trunc_exp"},
    {FamilyKind::trunc_exp2, "trunc_exp2"},
    {FamilyKind::chebyshev2, "chebyshev2"},
    {FamilyKind::euler, "euler"},
    {FamilyKind::bernoulli, "bernoulli"},
}};

// n! sum_r x^(n - step r) y^r / ((n - step r)! [r!]) over r with n - step r >= 0.
Poly two_variable_sum(unsigned n, const Rational& y, unsigned step, bool divide_by_r_factorial) {
  std::vector<Rational> c(n + 1);
  Rational yr(1);
  for (unsigned r = 0; step * r <= n; ++r) {
    Rational term = falling_factorial(n, step * r) * yr;
    if (divide_by_r_factorial) term /= factorial(r);
    c[n - step * r] += term;
    yr *= y;
  }
  return Poly(std::move(c), Var::x);
}

std::mutex& bernoulli_mutex() {
  static std::mutex m;
  return m;
}

NumberSequence& bernoulli_cache() {
  static NumberSequence seq = NumberSequence::bernoulli();
  return seq;
}

}  // namespace

std::string to_string(FamilyKind kind) {
  for (const auto& [k, name] : kFamilyNames) {
    if (k == kind) return std::string(name);
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (const auto& [k, n] : kFamilyNames) {
    if (n == name) return k;
  }
  throw UsageError("unknown family '" + std::string(name) + "'");
}

bool family_takes_y(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::hermite1:
    case FamilyKind::hermite2:
    case FamilyKind::trunc_exp:
    case FamilyKind::trunc_exp2:
    case FamilyKind::chebyshev2:
      return true;
    default:
      return false;
  }
}

FamilyId::FamilyId(FamilyKind kind, std::optional<Rational> y) : kind_(kind), y_(std::move(y)) {
  if (family_takes_y(kind_) && !y_) throw UsageError("family " + to_string(kind_) + " needs a value for y");
  if (!family_takes_y(kind_) && y_) throw UsageError("family " + to_string(kind_) + " takes no parameter");
}

std::string FamilyId::label() const {
  return y_ ? to_string(kind_) + "(y=" + y_->to_string() + ")" : to_string(kind_);
}

AmplitudeImage family_amplitude(const FamilyId& f) {
  switch (f.kind()) {
    case FamilyKind::hermite1:
      return {AmplitudeSpec(AmplitudeKind::exp_neg), -*f.y(), 1};
    case FamilyKind::hermite2:
      return {AmplitudeSpec(AmplitudeKind::hermite2, *f.y()), Rational(1), 1};
    case FamilyKind::he:
      return {AmplitudeSpec(AmplitudeKind::exp_neg_half_square), Rational(1), 1};
    case FamilyKind::trunc_exp:
      return {AmplitudeSpec(AmplitudeKind::trunc_exp, *f.y()), Rational(1), 1};
    case FamilyKind::trunc_exp2:
      return {AmplitudeSpec(AmplitudeKind::trunc_exp, *f.y()), Rational(1), 2};
    case FamilyKind::euler:
      return {AmplitudeSpec(AmplitudeKind::euler), Rational(1), 1};
    case FamilyKind::bernoulli:
      return {AmplitudeSpec(AmplitudeKind::bernoulli), Rational(1), 1};
    case FamilyKind::chebyshev2:
      break;
  }
  throw UnsupportedError("family " + to_string(f.kind()) + " has no Appell amplitude");
}

PowerSeries family_amplitude_series(const FamilyId& f, std::size_t order) {
  const AmplitudeImage img = family_amplitude(f);
  const std::size_t inner = (order + img.power - 1) / img.power;
  return series_substitute(maclaurin(img.base, inner), img.scale, img.power).truncated(order);
}

Poly appell_from_series(const PowerSeries& c, unsigned n) {
  if (c.order() < n) throw UsageError("appell_from_series: series too short");
  std::vector<Rational> out(n + 1);
  for (unsigned k = 0; k <= n; ++k) out[n - k] = falling_factorial(n, k) * c[k];
  return Poly(std::move(out), Var::x);
}

Poly exact_polynomial(const FamilyId& f, unsigned n) {
  switch (f.kind()) {
    case FamilyKind::hermite1:
      return two_variable_sum(n, *f.y(), 1, true);
    case FamilyKind::hermite2:
      return two_variable_sum(n, *f.y(), 2, true);
    case FamilyKind::he:
      return two_variable_sum(n, Rational(-1, 2), 2, true);
    case FamilyKind::trunc_exp:
      return two_variable_sum(n, *f.y(), 1, false);
    case FamilyKind::trunc_exp2:
      return two_variable_sum(n, *f.y(), 2, false);
    case FamilyKind::chebyshev2: {
      // (-1)^n sum_r (n-r)! x^(n-2r) (-y)^r / ((n-2r)! r!)
      std::vector<Rational> c(n + 1);
      const Rational sign = n % 2 ? Rational(-1) : Rational(1);
      Rational yr(1);
      for (unsigned r = 0; 2 * r <= n; ++r) {
        c[n - 2 * r] = sign * factorial(n - r) * yr / (factorial(n - 2 * r) * factorial(r));
        yr *= -*f.y();
      }
      return Poly(std::move(c), Var::x);
    }
    case FamilyKind::euler:
      return appell_from_series(maclaurin(AmplitudeSpec(AmplitudeKind::euler), n), n);
    case FamilyKind::bernoulli: {
      // (B + x)^n = sum_r C(n,r) B_(n-r) x^r
      std::vector<Rational> c(n + 1);
      for (unsigned r = 0; r <= n; ++r) c[r] = binomial(n, r) * bernoulli_number(n - r);
      return Poly(std::move(c), Var::x);
    }
  }
  throw UsageError("unknown family kind");
}

Rational chebyshev_u(unsigned r, const Rational& a, const Rational& b) {
  Rational prev2(1);
  if (r == 0) return prev2;
  Rational prev1 = -a;
  for (unsigned k = 2; k <= r; ++k) {
    Rational next = -a * prev1 - b * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

Rational bernoulli_number(unsigned r) {
  std::lock_guard lock(bernoulli_mutex());
  return bernoulli_cache().at(r);
}

bool generating_check(const FamilyId& f, std::size_t order) {
  const PowerSeries amp = family_amplitude_series(f, order);
  for (std::size_t n = 0; n <= order; ++n) {
    // t^n coefficient of A(t) e^(xt): sum_k c_k x^(n-k)/(n-k)!
    Poly product(Var::x);
    for (std::size_t k = 0; k <= n; ++k) {
      product += Poly::monomial(amp[k] / factorial(static_cast<unsigned>(n - k)), n - k, Var::x);
    }
    const Poly lhs = exact_polynomial(f, static_cast<unsigned>(n)) * (Rational(1) / factorial(static_cast<unsigned>(n)));
    if (lhs != product) return false;
  }
  return true;
}

NumberSequence::NumberSequence(Kind kind, Rational a, Rational b)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)) {}

NumberSequence NumberSequence::bernoulli() { return NumberSequence(Kind::bernoulli_numbers, Rational(0), Rational(0)); }

NumberSequence NumberSequence::chebyshev(Rational a, Rational b) {
  return NumberSequence(Kind::chebyshev_values, std::move(a), std::move(b));
}

const Rational& NumberSequence::at(unsigned r) {
  extend_to(r);
  return values_[r];
}

void NumberSequence::extend_to(unsigned r) {
  while (values_.size() <= r) {
    const auto k = static_cast<unsigned>(values_.size());
    if (kind_ == Kind::chebyshev_values) {
      if (k == 0) values_.emplace_back(1);
      else if (k == 1) values_.push_back(-a_);
      else values_.push_back(-a_ * values_[k - 1] - b_ * values_[k - 2]);
      continue;
    }
    if (k == 0) {
      values_.emplace_back(1);
      continue;
    }
    // sum_{j=0}^{k} C(k+1, j) B_j = 0
    Rational s;
    for (unsigned j = 0; j < k; ++j) s += binomial(k + 1, j) * values_[j];
    values_.push_back(-s / Rational(static_cast<std::int64_t>(k) + 1));
  }
}

}  // namespace appell
