#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "appell/errors.hpp"
#include "appell/families.hpp"
#include "appell/lab.hpp"
#include "appell/operators.hpp"
#include "appell/pade.hpp"
#include "appell/umbral.hpp"
#include "appell/verify.hpp"

using namespace appell;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDefect = 3;

std::optional<Rational> parse_y(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Rational::parse(text);
}

std::vector<std::string> as_strings(const Poly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  if (out.empty()) out.emplace_back("0");
  return out;
}

int run_pade(const std::string& kind, const std::string& y, std::size_t m, std::size_t n, bool json) {
  const AmplitudeSpec a(parse_amplitude_kind(kind), parse_y(y));
  const PadeApproximant p = pade_of_amplitude(a, m, n);
  if (json) {
    nlohmann::ordered_json j;
    j["amplitude"] = kind;
    if (a.y()) j["y"] = a.y()->to_string();
    j["m"] = m;
    j["n"] = n;
    j["numerator"] = as_strings(p.value.numerator());
    j["denominator"] = as_strings(p.value.denominator());
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "numerator," << p.value.numerator().coefficient_list() << '\n'
              << "denominator," << p.value.denominator().coefficient_list() << '\n';
  }
  return 0;
}

int run_family(const std::string& kind, const std::string& y, unsigned n) {
  const Poly p = exact_polynomial(FamilyId(parse_family_kind(kind), parse_y(y)), n);
  std::cout << "power,coefficient\n";
  for (unsigned k = 0; k <= n; ++k) std::cout << k << ',' << p.coefficient(k).to_string() << '\n';
  return 0;
}

int run_approx(const std::string& kind, const std::string& y, const std::vector<std::size_t>& mn, unsigned n) {
  const FamilyId f(parse_family_kind(kind), parse_y(y));
  const Poly approx = pade_appell(f, mn[0], mn[1], n).value;
  const Poly exact = exact_polynomial(f, n);
  std::cout << "power,approx,exact,exact_equal\n";
  for (unsigned k = 0; k <= n; ++k) {
    const bool eq = approx.coefficient(k) == exact.coefficient(k);
    std::cout << k << ',' << approx.coefficient(k).to_string() << ',' << exact.coefficient(k).to_string() << ','
              << (eq ? "true" : "false") << '\n';
  }
  return 0;
}

int run_verify(const std::string& suite) {
  const auto results = verify::run_suite(suite);
  bool all = true;
  std::cout << "suite,check,result,detail\n";
  for (const auto& r : results) {
    all = all && r.passed;
    std::cout << r.suite << ',' << r.name << ',' << (r.passed ? "pass" : "FAIL") << ',' << r.detail << '\n';
  }
  std::cout << (all ? "all checks passed" : "some checks failed") << '\n';
  return all ? 0 : 1;
}

int run_figure(const std::string& id, std::optional<double> xmin, std::optional<double> xmax,
               std::optional<std::size_t> points, bool json) {
  if (!lab::is_figure_id(id)) throw UsageError("unknown figure id '" + id + "'");
  const lab::GridSpec d = lab::default_grid(id);
  const lab::GridSpec g(xmin.value_or(d.xmin()), xmax.value_or(d.xmax()), points.value_or(d.points()));
  const lab::FigureJob job = lab::build_figure(id, g);
  std::cout << (json ? lab::figure_json(job) + "\n" : lab::figure_csv(job));
  return 0;
}

int run_bessel(unsigned order, std::size_t terms) {
  const PowerSeries s = bessel_pade_series(order, terms);
  std::cout << "power,coefficient\n";
  for (std::size_t k = 0; k <= s.order(); k += 2) std::cout << k << ',' << s[k].to_string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pade approximants of Appell amplitudes and the polynomial families they generate"};
  app.require_subcommand(1);

  std::string kind;
  std::string y;
  std::size_t m = 0;
  std::size_t n = 0;
  unsigned index = 0;
  bool json = false;
  bool csv = false;

  auto* pade = app.add_subcommand("pade", "Pade approximant of a catalog amplitude");
  pade->add_option("--amplitude", kind, "exp_neg, exp_neg_half_square, trunc_exp, euler, bernoulli, hermite2")
      ->required();
  pade->add_option("--y", y, "parameter as p/q");
  pade->add_option("-m", m, "numerator order")->required();
  pade->add_option("-n", n, "denominator order")->required();
  auto* pj = pade->add_flag("--json", json);
  pade->add_flag("--csv", csv)->excludes(pj);

  auto* family = app.add_subcommand("family", "Exact member of a polynomial family");
  family->add_option("--kind", kind)->required();
  family->add_option("--y", y);
  family->add_option("-n", index, "index")->required();

  std::vector<std::size_t> mn;
  auto* approx = app.add_subcommand("approx", "Pade-approximated family member next to the exact one");
  approx->add_option("--kind", kind)->required();
  approx->add_option("--y", y);
  approx->add_option("--pade", mn, "M N")->expected(2)->required();
  approx->add_option("-n", index, "index")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run exact identity checks");
  verify->add_option("--suite", suite)->check(CLI::IsMember([] {
    std::vector<std::string> names = verify::suite_names();
    names.emplace_back("all");
    return names;
  }()));

  std::string id;
  std::optional<double> xmin;
  std::optional<double> xmax;
  std::optional<std::size_t> points;
  auto* figure = app.add_subcommand("figure", "Figure data as CSV");
  figure->add_option("--id", id)->required();
  figure->add_option("--xmin", xmin);
  figure->add_option("--xmax", xmax);
  figure->add_option("--points", points);
  figure->add_flag("--json", json);

  unsigned order = 0;
  std::size_t terms = kDefaultBesselTerms;
  auto* bessel = app.add_subcommand("bessel", "Series of the umbral Pade Bessel approximant");
  bessel->add_option("--order", order)->required();
  bessel->add_option("--terms", terms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*pade) return run_pade(kind, y, m, n, json);
    if (*family) return run_family(kind, y, index);
    if (*approx) return run_approx(kind, y, mn, index);
    if (*verify) return run_verify(suite);
    if (*figure) return run_figure(id, xmin, xmax, points, json);
    if (*bessel) return run_bessel(order, terms);
  } catch (const PadeDefect& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDefect;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
