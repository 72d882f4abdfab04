#include "appell/lab.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "appell/errors.hpp"
#include "appell/families.hpp"
#include "appell/operators.hpp"
#include "appell/pade.hpp"
#include "appell/umbral.hpp"

namespace appell::lab {

namespace {

std::vector<double> to_doubles(std::span<const Rational> coeffs) {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.to_double());
  return out;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Samples sample(const GridSpec& g, const std::function<double(double)>& f) {
  Samples out;
  out.reserve(g.points());
  for (std::size_t i = 0; i < g.points(); ++i) {
    const double x = g.at(i);
    out.emplace_back(x, f(x));
  }
  return out;
}

std::string label_pade(std::size_t m, std::size_t n) { return "pade_" + std::to_string(m) + "_" + std::to_string(n); }

FigureJob exponential_figure(std::string id, const GridSpec& g, std::vector<std::pair<std::size_t, std::size_t>> orders,
                             std::size_t maclaurin_order) {
  FigureJob job{std::move(id), {}};
  job.columns.push_back({"exact", sample(g, [](double x) { return std::exp(-x); })});
  const PowerSeries series = maclaurin(AmplitudeSpec(AmplitudeKind::exp_neg), 8);
  for (const auto& [m, n] : orders) {
    job.columns.push_back({label_pade(m, n), eval_grid(solve_pade(series, m, n).value, g)});
  }
  job.columns.push_back({"maclaurin_" + std::to_string(maclaurin_order),
                         eval_grid(series.truncated(maclaurin_order).to_poly(), g)});
  return job;
}

FigureJob polynomial_figure(std::string id, const GridSpec& g, const FamilyId& family, std::size_t m, std::size_t n,
                            unsigned index) {
  FigureJob job{std::move(id), {}};
  job.columns.push_back({"exact", eval_grid(exact_polynomial(family, index), g)});
  job.columns.push_back({label_pade(m, n), eval_grid(pade_appell(family, m, n, index).value, g)});
  return job;
}

FigureJob bessel_figure(std::string id, const GridSpec& g, unsigned second_order) {
  FigureJob job{std::move(id), {}};
  job.columns.push_back({"exact", sample(g, reference_j0)});
  job.columns.push_back({label_pade(0, 2), eval_grid(bessel_pade_series(2), g)});
  job.columns.push_back({label_pade(0, second_order), eval_grid(bessel_pade_series(second_order), g)});
  return job;
}

}  // namespace

GridSpec::GridSpec(double xmin, double xmax, std::size_t points) : xmin_(xmin), xmax_(xmax), points_(points) {
  if (!(xmin < xmax)) throw UsageError("grid needs xmin < xmax");
  if (points < 2) throw UsageError("grid needs at least 2 points");
}

double GridSpec::at(std::size_t i) const {
  if (i + 1 == points_) return xmax_;
  return xmin_ + (xmax_ - xmin_) * static_cast<double>(i) / static_cast<double>(points_ - 1);
}

Samples eval_grid(const Poly& p, const GridSpec& g) {
  const auto c = to_doubles(p.coefficients());
  return sample(g, [&c](double x) { return horner(c, x); });
}

Samples eval_grid(const PowerSeries& s, const GridSpec& g) {
  const auto c = to_doubles(s.coefficients());
  return sample(g, [&c](double x) { return horner(c, x); });
}

Samples eval_grid(const RationalFunction& f, const GridSpec& g) {
  const auto num = to_doubles(f.numerator().coefficients());
  const auto den = to_doubles(f.denominator().coefficients());
  Samples out;
  out.reserve(g.points());
  double prev_den = 0.0;
  for (std::size_t i = 0; i < g.points(); ++i) {
    const double x = g.at(i);
    const double d = horner(den, x);
    if (d == 0.0) throw PoleError("pole at x = " + format_double(x), x);
    if (i > 0 && (d < 0.0) != (prev_den < 0.0)) {
      throw PoleError("pole between x = " + format_double(g.at(i - 1)) + " and x = " + format_double(x), x);
    }
    prev_den = d;
    out.emplace_back(x, horner(num, x) / d);
  }
  return out;
}

double reference_j0(double x) {
  if (!(std::fabs(x) <= 12.0)) throw RangeError("reference_j0 is valid for |x| <= 12, got " + format_double(x));
  const long double q = static_cast<long double>(x) * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int r = 1; r < 200; ++r) {
    term *= -q / (static_cast<long double>(r) * r);
    if (std::fabs(term) < 1e-16L && static_cast<long double>(r) * r > q) break;
    sum += term;
  }
  return static_cast<double>(sum);
}

double sup_error(const Samples& a, const Samples& b) {
  if (a.size() != b.size()) throw UsageError("sup_error: grids differ in size");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) throw UsageError("sup_error: grids differ at index " + std::to_string(i));
    worst = std::max(worst, std::fabs(a[i].second - b[i].second));
  }
  return worst;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  std::replace(s.begin(), s.end(), ',', '.');
  return s;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"1a", "1b", "2a", "2b", "2c", "2d", "3a", "3b", "3c",
                                            "3d", "3e", "3f", "4a", "4b", "5a", "5b"};
  return ids;
}

bool is_figure_id(std::string_view id) {
  const auto& ids = figure_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

GridSpec default_grid(std::string_view id) {
  if (!is_figure_id(id)) throw UsageError("unknown figure id '" + std::string(id) + "'");
  switch (id[0]) {
    case '1': return GridSpec(0.0, 4.0, 201);
    case '2': return GridSpec(-3.0, 3.0, 241);
    case '3': return GridSpec(-2.0, 2.0, 201);
    case '4': return GridSpec(-4.0, 4.0, 321);
    default: return GridSpec(0.0, 8.0, 321);
  }
}

FigureJob build_figure(std::string_view id, const GridSpec& g) {
  if (!is_figure_id(id)) throw UsageError("unknown figure id '" + std::string(id) + "'");
  const std::string sid(id);
  const FamilyId hermite1(FamilyKind::hermite1, Rational(-1));
  const FamilyId he(FamilyKind::he);
  const char group = id[0];
  const char panel = id[1];
  switch (group) {
    case '1':
      if (panel == 'a') return exponential_figure(sid, g, {{0, 2}, {1, 1}}, 2);
      return exponential_figure(sid, g, {{0, 3}}, 3);
    case '2':
      if (panel == 'd') return polynomial_figure(sid, g, hermite1, 2, 1, 3);
      return polynomial_figure(sid, g, hermite1, 1, 1, static_cast<unsigned>(panel - 'a' + 1));
    case '3':
      return polynomial_figure(sid, g, he, 1, 1, static_cast<unsigned>(panel - 'a' + 2));
    case '4':
      return polynomial_figure(sid, g, he, 3, 2, static_cast<unsigned>(panel - 'a' + 11));
    default:
      return bessel_figure(sid, g, panel == 'a' ? 3 : 4);
  }
}

std::string figure_csv(const FigureJob& job) {
  std::string out = "x";
  for (const auto& c : job.columns) out += "," + c.label;
  out += '\n';
  const std::size_t rows = job.columns.empty() ? 0 : job.columns.front().values.size();
  for (std::size_t i = 0; i < rows; ++i) {
    out += format_double(job.columns.front().values[i].first);
    for (const auto& c : job.columns) out += "," + format_double(c.values[i].second);
    out += '\n';
  }
  return out;
}

std::string figure_json(const FigureJob& job) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const std::size_t n = job.columns.empty() ? 0 : job.columns.front().values.size();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::ordered_json row;
    row["x"] = job.columns.front().values[i].first;
    for (const auto& c : job.columns) row[c.label] = c.values[i].second;
    rows.push_back(std::move(row));
  }
  return rows.dump() + "\n";
}

}  // namespace appell::lab
