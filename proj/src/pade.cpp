#include "appell/pade.hpp"

#include <array>
#include <utility>
#include <vector>

#include "appell/errors.hpp"

namespace appell {

namespace {

constexpr std::array<std::pair<AmplitudeKind, std::string_view>, 6> kAmplitudeNames{{
    {AmplitudeKind::exp_neg, "exp_neg"},
    {AmplitudeKind::exp_neg_half_square, "exp_neg_half_square"},
    {AmplitudeKind::trunc_exp, "trunc_exp"},
    {AmplitudeKind::euler, "euler"},
    {AmplitudeKind::bernoulli, "bernoulli"},
    {AmplitudeKind::hermite2, "hermite2"},
}};

// exp(scale * t^2) through t^order.
PowerSeries even_exp_series(const Rational& scale, std::size_t order) {
  return series_substitute(exp_series(scale, order / 2 + 1, Var::t), Rational(1), 2).truncated(order);
}

using IntRow = std::vector<mpz_class>;

// Multiplies a rational row through by the lcm of its denominators.
IntRow integer_row(const std::vector<Rational>& row) {
  mpz_class l = 1;
  for (const auto& r : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.raw().get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& r : row) out.push_back(r.numerator() * (l / r.denominator()));
  return out;
}

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1) {
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

struct PivotRow {
  IntRow row;
  std::size_t column;
};

}  // namespace

std::string to_string(AmplitudeKind kind) {
  for (const auto& [k, name] : kAmplitudeNames) {
    if (k == kind) return std::string(name);
  }
  return "?";
}

AmplitudeKind parse_amplitude_kind(std::string_view name) {
  for (const auto& [k, n] : kAmplitudeNames) {
    if (n == name) return k;
  }
  throw UsageError("unknown amplitude '" + std::string(name) + "'");
}

bool amplitude_takes_y(AmplitudeKind kind) {
  return kind == AmplitudeKind::trunc_exp || kind == AmplitudeKind::hermite2;
}

AmplitudeSpec::AmplitudeSpec(AmplitudeKind kind, std::optional<Rational> y) : kind_(kind), y_(std::move(y)) {
  if (amplitude_takes_y(kind_) && !y_) {
    throw UsageError("amplitude " + to_string(kind_) + " needs a value for y");
  }
  if (!amplitude_takes_y(kind_) && y_) {
    throw UsageError("amplitude " + to_string(kind_) + " takes no parameter");
  }
}

PowerSeries maclaurin(const AmplitudeSpec& a, std::size_t order) {
  switch (a.kind()) {
    case AmplitudeKind::exp_neg:
      return exp_series(Rational(-1), order, Var::t);
    case AmplitudeKind::exp_neg_half_square:
      return even_exp_series(Rational(-1, 2), order);
    case AmplitudeKind::hermite2:
      return even_exp_series(*a.y(), order);
    case AmplitudeKind::trunc_exp: {
      std::vector<Rational> c(order + 1);
      c[0] = Rational(1);
      for (std::size_t r = 1; r <= order; ++r) c[r] = c[r - 1] * *a.y();
      return PowerSeries(std::move(c), Var::t);
    }
    case AmplitudeKind::euler: {
      // 2/(e^t + 1) = 1 / ((e^t + 1)/2)
      std::vector<Rational> half(order + 1);
      half[0] = Rational(1);
      for (std::size_t r = 1; r <= order; ++r) half[r] = Rational(1, 2) / factorial(static_cast<unsigned>(r));
      return series_invert(PowerSeries(std::move(half), Var::t), order);
    }
    case AmplitudeKind::bernoulli: {
      // t/(e^t - 1) = 1 / ((e^t - 1)/t)
      std::vector<Rational> quotient(order + 1);
      for (std::size_t r = 0; r <= order; ++r) quotient[r] = Rational(1) / factorial(static_cast<unsigned>(r + 1));
      return series_invert(PowerSeries(std::move(quotient), Var::t), order);
    }
  }
  throw UsageError("unknown amplitude kind");
}

RationalFunction rational_amplitude(const AmplitudeSpec& a) {
  if (a.kind() != AmplitudeKind::trunc_exp) {
    throw UnsupportedError("amplitude " + to_string(a.kind()) + " is not rational; use a Pade image");
  }
  return RationalFunction(Poly::constant(Rational(1), Var::t), Poly({Rational(1), -*a.y()}, Var::t));
}

PadeApproximant solve_pade(const PowerSeries& c, std::size_t m, std::size_t n) {
  if (c.order() < m + n) {
    throw UsageError("solve_pade: series order " + std::to_string(c.order()) + " < m+n = " +
                     std::to_string(m + n));
  }
  auto coef = [&c](std::ptrdiff_t k) { return k < 0 ? Rational(0) : c[static_cast<std::size_t>(k)]; };

  // Unknowns b_1..b_n (column j-1 holds b_j); the last column is the right-hand side.
  std::vector<PivotRow> pivots;
  for (std::size_t k = m + 1; k <= m + n; ++k) {
    std::vector<Rational> eq(n + 1);
    for (std::size_t j = 1; j <= n; ++j) eq[j - 1] = coef(static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(j));
    eq[n] = -c[k];
    IntRow row = integer_row(eq);

    for (const auto& p : pivots) {
      if (row[p.column] == 0) continue;
      const mpz_class lead = p.row[p.column];
      const mpz_class factor = row[p.column];
      for (std::size_t j = 0; j <= n; ++j) row[j] = lead * row[j] - factor * p.row[j];
      remove_content(row);
    }

    std::size_t col = 0;
    while (col < n && row[col] == 0) ++col;
    if (col == n) {
      if (row[n] != 0) throw PadeDefect(m, n, k);
      continue;  // redundant equation
    }
    pivots.push_back({std::move(row), col});
  }

  // Back substitution; columns that never received a pivot are free and set to 0.
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Rational acc(it->row[n]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == it->column || it->row[j] == 0) continue;
      acc -= Rational(it->row[j]) * b[j + 1];
    }
    b[it->column + 1] = acc / Rational(it->row[it->column]);
  }

  std::vector<Rational> a(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    for (std::size_t j = 0; j <= std::min(k, n); ++j) a[k] += c[k - j] * b[j];
  }
  RationalFunction value(Poly(std::move(a), c.var()), Poly(std::move(b), c.var()));
  return PadeApproximant{m, n, 1, value.reduced()};
}

PadeApproximant pade_of_amplitude(const AmplitudeSpec& a, std::size_t m, std::size_t n) {
  switch (a.kind()) {
    case AmplitudeKind::exp_neg_half_square:
    case AmplitudeKind::hermite2: {
      // e^(-u) in u, then u = t^2/2 or u = -y t^2.
      const PadeApproximant inner = solve_pade(exp_series(Rational(-1), m + n, Var::t), m, n);
      const Rational scale = a.kind() == AmplitudeKind::hermite2 ? -*a.y() : Rational(1, 2);
      return PadeApproximant{m, n, 2, substitute(inner.value, scale, 2)};
    }
    default:
      return solve_pade(maclaurin(a, m + n), m, n);
  }
}

int agreement_order(const RationalFunction& f, const PowerSeries& c) {
  if (f.var() != c.var()) throw UsageError("agreement_order: variable mismatch");
  const PowerSeries e = f.expand(c.order());
  for (std::size_t k = 0; k <= c.order(); ++k) {
    if (e[k] != c[k]) return static_cast<int>(k) - 1;
  }
  return static_cast<int>(c.order());
}

RationalFunction euler_21_printed() {
  return RationalFunction(Poly({Rational(1), Rational(-5, 12), Rational(-1, 24)}, Var::t),
                          Poly({Rational(1), Rational(1, 12)}, Var::t));
}

RationalFunction euler_12_from_exponential() {
  const PadeApproximant e = solve_pade(exp_series(Rational(1), 3, Var::t), 2, 1);
  const Poly& num = e.value.numerator();
  const Poly& den = e.value.denominator();
  // 2/(N/D + 1) = 2D/(N + D), normalized so the denominator starts at 1.
  const Poly sum = num + den;
  const Rational s0 = sum.coefficient(0);
  return RationalFunction(den * (Rational(2) / s0), sum * (Rational(1) / s0)).reduced();
}

}  // namespace appell
