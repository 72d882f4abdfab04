#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "appell/errors.hpp"
#include "appell/families.hpp"
#include "appell/lab.hpp"
#include "appell/operators.hpp"
#include "appell/umbral.hpp"

using namespace appell;
using namespace appell::lab;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

RationalFunction rf(std::vector<Rational> n, std::vector<Rational> d) {
  return RationalFunction(Poly(std::move(n), Var::x), Poly(std::move(d), Var::x));
}

const Column& column(const FigureJob& job, const std::string& label) {
  for (const auto& c : job.columns) {
    if (c.label == label) return c;
  }
  throw std::runtime_error("no column " + label);
}

}  // namespace

TEST_CASE("grid") {
  const GridSpec g(-1, 1, 3);
  CHECK(g.at(0) == -1.0);
  CHECK(g.at(1) == 0.0);
  CHECK(g.at(2) == 1.0);
  CHECK(GridSpec(0, 8, 321).at(320) == 8.0);
  CHECK_THROWS_AS(GridSpec(1, 1, 5), UsageError);
  CHECK_THROWS_AS(GridSpec(0, 1, 1), UsageError);
  CHECK_THROWS_AS(GridSpec(0, NAN, 4), UsageError);
}

TEST_CASE("evaluation on a grid") {
  const auto s = eval_grid(rf({q(1)}, {q(1), q(1), q(1, 2)}), GridSpec(0, 1, 2));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == std::pair<double, double>(0.0, 1.0));
  CHECK(s[1] == std::pair<double, double>(1.0, 0.4));
  CHECK(eval_grid(Poly::monomial(q(1), 3, Var::x), GridSpec(0, 1, 2))[0].second == 0.0);
  CHECK(eval_grid(rf({q(1), q(-1, 2)}, {q(1), q(1, 2)}), GridSpec(0, 2, 3))[2].second == 0.0);
  CHECK_THROWS_AS(eval_grid(rf({q(1)}, {q(1), q(-1)}), GridSpec(0, 2, 3)), PoleError);
  // pole strictly between two abscissae
  CHECK_THROWS_AS(eval_grid(rf({q(1)}, {q(1), q(-2, 3)}), GridSpec(0, 2, 3)), PoleError);
  try {
    eval_grid(rf({q(1)}, {q(1), q(-1)}), GridSpec(0, 2, 3));
  } catch (const PoleError& e) {
    CHECK(e.abscissa() == 1.0);
  }
}

TEST_CASE("reference J0") {
  CHECK(reference_j0(0) == 1.0);
  CHECK(std::abs(reference_j0(2.404825557695773)) < 1e-9);
  CHECK(std::abs(reference_j0(1) - 0.7651976865579666) < 1e-12);
  CHECK(std::abs(reference_j0(8) - 0.17165080713755390) < 1e-12);
  CHECK(reference_j0(-3) == reference_j0(3));
  CHECK_THROWS_AS(reference_j0(12.5), RangeError);
  // independent summation of the series
  for (double x : {0.5, 3.0, 5.5201, 7.25}) {
    long double sum = 0, term = 1;
    for (int r = 0; r < 60; ++r) {
      if (r > 0) term *= -(x / 2) * (x / 2) / (static_cast<long double>(r) * r);
      sum += term;
    }
    CHECK(std::abs(reference_j0(x) - static_cast<double>(sum)) < 1e-13);
  }
}

TEST_CASE("sup error") {
  const GridSpec g(-1, 1, 101);
  const Poly he6 = exact_polynomial(FamilyId(FamilyKind::he), 6);
  const Poly approx = pade_appell(FamilyId(FamilyKind::he), 1, 1, 6).value;
  CHECK(sup_error(eval_grid(he6, g), eval_grid(he6, g)) == 0.0);
  CHECK(sup_error(eval_grid(approx, g), eval_grid(he6, g)) == doctest::Approx(7.5).epsilon(1e-14));
  CHECK_THROWS_AS(sup_error(eval_grid(he6, g), eval_grid(he6, GridSpec(-1, 1, 100))), UsageError);
  CHECK_THROWS_AS(sup_error(eval_grid(he6, g), eval_grid(he6, GridSpec(-1, 2, 101))), UsageError);
}

TEST_CASE("float formatting") {
  CHECK(format_double(0.4) == "0.40000000000000002");
  CHECK(format_double(1) == "1");
  CHECK(format_double(-0.5) == "-0.5");
  CHECK(format_double(1e-20) == "9.9999999999999995e-21");
}

TEST_CASE("figure ids and grids") {
  CHECK(figure_ids().size() == 16);
  CHECK(is_figure_id("3f"));
  CHECK_FALSE(is_figure_id("3g"));
  CHECK(default_grid("1b").points() == 201);
  CHECK(default_grid("2c").xmin() == -3.0);
  CHECK(default_grid("4a").points() == 321);
  CHECK(default_grid("5b").xmax() == 8.0);
  CHECK_THROWS_AS(build_figure("6a", GridSpec(0, 1, 2)), UsageError);
}

TEST_CASE("figure 1a schema") {
  const FigureJob job = build_figure("1a", GridSpec(0, 4, 5));
  const std::string csv = figure_csv(job);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,exact,pade_0_2,pade_1_1,maclaurin_2");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
  }
  CHECK(rows == 5);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  CHECK(figure_emit("1a", GridSpec(0, 4, 5)) == csv);
}

TEST_CASE("figure json mirrors csv") {
  const FigureJob job = build_figure("2d", GridSpec(-1, 1, 3));
  const auto j = nlohmann::json::parse(figure_json(job));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["x"] == -1.0);
  CHECK(j[2].contains("pade_2_1"));
}

TEST_CASE("figure columns") {
  const FigureJob f3c = build_figure("3c", default_grid("3c"));
  CHECK(sup_error(column(f3c, "exact").values, column(f3c, "pade_1_1").values) == 0.0);
  const FigureJob f4a = build_figure("4a", default_grid("4a"));
  CHECK(sup_error(column(f4a, "exact").values, column(f4a, "pade_3_2").values) == 0.0);
  const FigureJob f3e = build_figure("3e", GridSpec(-1, 1, 101));
  CHECK(sup_error(column(f3e, "exact").values, column(f3e, "pade_1_1").values) ==
        doctest::Approx(7.5).epsilon(1e-14));
  for (const char* id : {"2a", "2b", "2c", "2d"}) CHECK(build_figure(id, default_grid(id)).columns.size() == 2);
  const FigureJob f5a = build_figure("5a", GridSpec(0, 8, 161));
  const double e2 = sup_error(column(f5a, "exact").values, column(f5a, "pade_0_2").values);
  const double e3 = sup_error(column(f5a, "exact").values, column(f5a, "pade_0_3").values);
  CHECK(e3 < e2);
  const FigureJob f1a = build_figure("1a", GridSpec(0, 4, 201));
  CHECK(column(f1a, "pade_1_1").values[100].second == 0.0);
}

TEST_CASE("determinism") {
  for (const auto& id : figure_ids()) CHECK(figure_emit(id, default_grid(id)) == figure_emit(id, default_grid(id)));
}
