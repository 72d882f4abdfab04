#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "appell/poly.hpp"
#include "appell/power_series.hpp"
#include "appell/rational_function.hpp"

namespace appell::lab {

/// Uniform grid xmin, ..., xmax with `points` abscissae.
class GridSpec {
 public:
  /// Throws UsageError unless xmin < xmax and points >= 2.
  GridSpec(double xmin, double xmax, std::size_t points);

  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  std::size_t points() const { return points_; }
  double at(std::size_t i) const;

 private:
  double xmin_;
  double xmax_;
  std::size_t points_;
};

using Samples = std::vector<std::pair<double, double>>;

/// Double-precision evaluation on the grid; coefficients are rounded once
/// each from their exact values.
Samples eval_grid(const Poly& p, const GridSpec& g);
Samples eval_grid(const PowerSeries& s, const GridSpec& g);
/// PoleError when the denominator vanishes at a grid point or changes sign
/// between two neighbouring ones.
Samples eval_grid(const RationalFunction& f, const GridSpec& g);

/// J_0 from its power series, summed until the next term drops below 1e-16.
/// RangeError outside |x| <= 12.
double reference_j0(double x);

/// max_i |a_i - b_i|; UsageError when the grids differ.
double sup_error(const Samples& a, const Samples& b);

/// "%.17g" with '.' as decimal separator.
std::string format_double(double v);

struct Column {
  std::string label;
  Samples values;
};

struct FigureJob {
  std::string id;
  std::vector<Column> columns;
};

/// Known ids: 1a 1b 2a 2b 2c 2d 3a-3f 4a 4b 5a 5b.
const std::vector<std::string>& figure_ids();
bool is_figure_id(std::string_view id);
GridSpec default_grid(std::string_view id);

/// Evaluates every curve of the figure on the grid. UsageError for unknown ids.
FigureJob build_figure(std::string_view id, const GridSpec& g);

/// Header `x,<label>,...` then one row per abscissa, '\n' line endings.
std::string figure_csv(const FigureJob& job);
/// Array of row objects {"x": ..., "<label>": ...}.
std::string figure_json(const FigureJob& job);

inline std::string figure_emit(std::string_view id, const GridSpec& g) { return figure_csv(build_figure(id, g)); }

}  // namespace appell::lab
