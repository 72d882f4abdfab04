#include <optional>
#include <random>

#include "doctest.h"

#include "appell/errors.hpp"
#include "appell/pade.hpp"

using namespace appell;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

RationalFunction rf(std::vector<Rational> n, std::vector<Rational> d) {
  return RationalFunction(Poly(std::move(n), Var::t), Poly(std::move(d), Var::t));
}

// Reference solver: dense Gauss-Jordan with partial pivoting on the
// denominator system, no content tricks. Empty when the system is singular.
std::optional<RationalFunction> oracle_pade(const PowerSeries& c, std::size_t m, std::size_t n) {
  auto coef = [&](long k) { return k < 0 ? Rational(0) : c[static_cast<std::size_t>(k)]; };
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const long k = static_cast<long>(m + 1 + i);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = coef(k - static_cast<long>(j) - 1);
    a[i][n] = -coef(k);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rational(0)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == Rational(0)) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] = a[i][j] - f * a[col][j];
    }
  }
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (std::size_t j = 0; j < n; ++j) b[j + 1] = a[j][n] / a[j][j];
  std::vector<Rational> p(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    for (std::size_t j = 0; j <= std::min(k, n); ++j) p[k] = p[k] + c[k - j] * b[j];
  }
  return RationalFunction(Poly(p, Var::t), Poly(b, Var::t));
}

}  // namespace

TEST_CASE("known approximants of e^-t") {
  const PowerSeries e = maclaurin(AmplitudeSpec(AmplitudeKind::exp_neg), 8);
  CHECK(solve_pade(e, 0, 2).value == rf({q(1)}, {q(1), q(1), q(1, 2)}));
  CHECK(solve_pade(e, 1, 1).value == rf({q(1), q(-1, 2)}, {q(1), q(1, 2)}));
  CHECK(solve_pade(e, 0, 3).value == rf({q(1)}, {q(1), q(1), q(1, 2), q(1, 6)}));
  CHECK(solve_pade(e, 2, 1).value == rf({q(1), q(-2, 3), q(1, 6)}, {q(1), q(1, 3)}));
}

TEST_CASE("[3|2] of e^(-t^2/2) via the inner variable") {
  const auto p = pade_of_amplitude(AmplitudeSpec(AmplitudeKind::exp_neg_half_square), 3, 2);
  CHECK(p.inner_power == 2);
  CHECK(p.value == rf({q(1), 0, q(-3, 10), 0, q(3, 80), 0, q(-1, 480)}, {q(1), 0, q(1, 5), 0, q(1, 80)}));
}

TEST_CASE("hermite2 amplitude maps through u = -y t^2") {
  // e^(y t^2) with y = 1/3: [1|1] in u = -t^2/3 of e^(-u) is (1 - u/2)/(1 + u/2)
  const auto p = pade_of_amplitude(AmplitudeSpec(AmplitudeKind::hermite2, q(1, 3)), 1, 1);
  CHECK(p.value == rf({q(1), 0, q(1, 6)}, {q(1), 0, q(-1, 6)}));
}

TEST_CASE("euler amplitude") {
  const AmplitudeSpec eu(AmplitudeKind::euler);
  CHECK(maclaurin(eu, 5).coefficient_list() == "1,-1/2,0,1/24,0,-1/240");
  CHECK(pade_of_amplitude(eu, 0, 2).value == rf({q(1)}, {q(1), q(1, 2), q(1, 4)}));
  CHECK(pade_of_amplitude(eu, 1, 2).value == rf({q(1), q(-1, 3)}, {q(1), q(1, 6), q(1, 12)}));
  CHECK(euler_12_from_exponential() == pade_of_amplitude(eu, 1, 2).value);
  try {
    pade_of_amplitude(eu, 2, 1);
    FAIL("expected a defect");
  } catch (const PadeDefect& d) {
    CHECK(d.m() == 2);
    CHECK(d.n() == 1);
    CHECK(d.order() == 3);
    CHECK(std::string(d.what()).find("order 3") != std::string::npos);
  }
  CHECK(agreement_order(euler_21_printed(), maclaurin(eu, 10)) == 2);
}

TEST_CASE("bernoulli amplitude") {
  const AmplitudeSpec b(AmplitudeKind::bernoulli);
  CHECK(maclaurin(b, 6).coefficient_list() == "1,-1/2,1/12,0,-1/720,0,1/30240");
  CHECK(pade_of_amplitude(b, 1, 1).value == rf({q(1), q(-1, 3)}, {q(1), q(1, 6)}));
}

TEST_CASE("trunc_exp amplitude is already rational") {
  const AmplitudeSpec a(AmplitudeKind::trunc_exp, q(2));
  CHECK(rational_amplitude(a) == rf({q(1)}, {q(1), q(-2)}));
  CHECK(pade_of_amplitude(a, 1, 2).value == rf({q(1)}, {q(1), q(-2)}));
  CHECK_THROWS_AS(rational_amplitude(AmplitudeSpec(AmplitudeKind::euler)), UnsupportedError);
}

TEST_CASE("amplitude spec validation") {
  CHECK_THROWS_AS(AmplitudeSpec(AmplitudeKind::trunc_exp), UsageError);
  CHECK_THROWS_AS(AmplitudeSpec(AmplitudeKind::euler, q(1)), UsageError);
  CHECK_THROWS_AS(parse_amplitude_kind("sinc"), UsageError);
  CHECK(parse_amplitude_kind("exp_neg_half_square") == AmplitudeKind::exp_neg_half_square);
  CHECK_THROWS_AS(solve_pade(maclaurin(AmplitudeSpec(AmplitudeKind::exp_neg), 2), 2, 1), UsageError);
}

TEST_CASE("agreement order") {
  const PowerSeries e = maclaurin(AmplitudeSpec(AmplitudeKind::exp_neg), 10);
  CHECK(agreement_order(solve_pade(e, 1, 1).value, e) == 2);
  CHECK(agreement_order(solve_pade(e, 2, 2).value, e) == 4);
  CHECK(agreement_order(rf({q(2)}, {q(1)}), e) == -1);
  CHECK(agreement_order(rf({q(1), q(-1)}, {q(1)}), e) == 1);
}

TEST_CASE("property: solver agrees with the dense reference on random series") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Rational> c(9);
    for (auto& a : c) a = Rational(num(rng), den(rng));
    c[0] = Rational(1);
    const PowerSeries s(c, Var::t);
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t n = 0; n + m <= 8 && n <= 4; ++n) {
        const auto want = oracle_pade(s, m, n);
        if (!want) continue;
        ++compared;
        const auto got = solve_pade(s, m, n);
        CHECK(got.value == want->reduced());
        CHECK(agreement_order(got.value, s) >= static_cast<int>(m + n));
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("property: [m|n] of e^-t has degree m over n and agrees through m+n") {
  const PowerSeries e = maclaurin(AmplitudeSpec(AmplitudeKind::exp_neg), 20);
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto p = solve_pade(e, m, n);
      CHECK(p.value.numerator().degree() == static_cast<int>(m));
      CHECK(p.value.denominator().degree() == static_cast<int>(n));
      CHECK(agreement_order(p.value, e) == static_cast<int>(m + n));
      // denominator of [m|n] is the numerator of [n|m] with t -> -t
      const auto flip = solve_pade(maclaurin(AmplitudeSpec(AmplitudeKind::exp_neg), 20), n, m);
      CHECK(substitute(flip.value.numerator(), q(-1), 1) == p.value.denominator());
    }
  }
}
