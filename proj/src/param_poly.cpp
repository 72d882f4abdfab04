#include "appell/param_poly.hpp"

#include "appell/errors.hpp"

namespace appell {

ParamPoly::ParamPoly(std::vector<Poly> coefficients) : coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.var() != Var::y) throw UsageError("ParamPoly coefficients must be polynomials in y");
  }
  trim();
}

ParamPoly ParamPoly::term(const Rational& c, std::size_t x_power, std::size_t y_power) {
  std::vector<Poly> coeffs(x_power + 1, Poly(Var::y));
  coeffs[x_power] = Poly::monomial(c, y_power, Var::y);
  return ParamPoly(std::move(coeffs));
}

Poly ParamPoly::coefficient(std::size_t x_power) const {
  return x_power < coeffs_.size() ? coeffs_[x_power] : Poly(Var::y);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Poly(Var::y));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Poly(Var::y));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ParamPoly operator*(const Rational& c, const ParamPoly& p) {
  std::vector<Poly> out;
  out.reserve(p.coeffs_.size());
  for (const auto& q : p.coeffs_) out.push_back(q * c);
  return ParamPoly(std::move(out));
}

ParamPoly operator*(const Poly& y_poly, const ParamPoly& p) {
  if (y_poly.var() != Var::y) throw UsageError("ParamPoly scaling needs a polynomial in y");
  std::vector<Poly> out;
  out.reserve(p.coeffs_.size());
  for (const auto& q : p.coeffs_) out.push_back(y_poly * q);
  return ParamPoly(std::move(out));
}

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ParamPoly d_dx(const ParamPoly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Poly> out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * Rational(static_cast<std::int64_t>(k)));
  return ParamPoly(std::move(out));
}

ParamPoly d_dy(const ParamPoly& p) {
  std::vector<Poly> out;
  for (const auto& q : p.coefficients()) out.push_back(derivative(q));
  return ParamPoly(std::move(out));
}

ParamPoly times_x(const ParamPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Poly> out{Poly(Var::y)};
  out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
  return ParamPoly(std::move(out));
}

Poly bind_y(const ParamPoly& p, const Rational& y) {
  std::vector<Rational> out;
  for (const auto& q : p.coefficients()) out.push_back(evaluate(q, y));
  return Poly(std::move(out), Var::x);
}

}  // namespace appell
