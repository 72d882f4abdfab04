#include "appell/poly.hpp"

#include <algorithm>

#include "appell/errors.hpp"

namespace appell {

namespace {

void require_same_var(const Poly& a, const Poly& b, const char* op) {
  if (a.var() != b.var()) {
    throw UsageError(std::string(op) + ": variable mismatch (" + to_string(a.var()) + " vs " +
                     to_string(b.var()) + ")");
  }
}

}  // namespace

std::string to_string(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::t: return "t";
    case Var::dx: return "dx";
    case Var::y: return "y";
  }
  return "?";
}

Poly::Poly(std::vector<Rational> coefficients, Var var) : coeffs_(std::move(coefficients)), var_(var) {
  trim();
}

Poly Poly::constant(const Rational& c, Var var) { return Poly({c}, var); }

Poly Poly::monomial(const Rational& c, std::size_t power, Var var) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Poly(std::move(coeffs), var);
}

Rational Poly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Poly Poly::with_var(Var var) const {
  Poly out = *this;
  out.var_ = var;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_var(*this, rhs, "poly_add");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_var(*this, rhs, "poly_sub");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  require_same_var(lhs, rhs, "poly_mul");
  if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.var());
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out), lhs.var());
}

Poly Poly::operator-() const { return *this * Rational(-1); }

std::string Poly::coefficient_list() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].to_string();
  }
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly derivative(const Poly& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return Poly(p.var());
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t r = 1; r < c.size(); ++r) out[r - 1] = c[r] * Rational(static_cast<std::int64_t>(r));
  return Poly(std::move(out), p.var());
}

Poly derivative(const Poly& p, unsigned k) {
  const auto c = p.coefficients();
  if (c.size() <= k) return Poly(p.var());
  std::vector<Rational> out(c.size() - k);
  for (std::size_t r = k; r < c.size(); ++r) {
    out[r - k] = c[r] * falling_factorial(static_cast<unsigned>(r), k);
  }
  return Poly(std::move(out), p.var());
}

Rational evaluate(const Poly& p, const Rational& at) {
  Rational acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly substitute(const Poly& p, const Rational& scale, unsigned power) {
  if (power == 0) throw UsageError("substitute: power must be >= 1");
  const auto c = p.coefficients();
  if (c.empty()) return p;
  std::vector<Rational> out((c.size() - 1) * power + 1);
  Rational s(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k * power] = c[k] * s;
    s *= scale;
  }
  return Poly(std::move(out), p.var());
}

Poly shift_up(const Poly& p, unsigned k) {
  if (p.is_zero()) return p;
  std::vector<Rational> out(k);
  const auto c = p.coefficients();
  out.insert(out.end(), c.begin(), c.end());
  return Poly(std::move(out), p.var());
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  require_same_var(num, den, "poly_divmod");
  if (den.is_zero()) throw UsageError("polynomial division by zero");
  const int dd = den.degree();
  const Rational lead = den.coefficient(static_cast<std::size_t>(dd));
  Poly rem = num;
  std::vector<Rational> quot(std::max(num.degree() - dd + 1, 0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Rational q = rem.coefficient(static_cast<std::size_t>(rem.degree())) / lead;
    quot[static_cast<std::size_t>(shift)] = q;
    rem -= shift_up(den * q, static_cast<unsigned>(shift));
  }
  return {Poly(std::move(quot), num.var()), rem};
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_var(a, b, "poly_gcd");
  Poly u = a;
  Poly v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u * (Rational(1) / u.coefficient(static_cast<std::size_t>(u.degree())));
}

}  // namespace appell
