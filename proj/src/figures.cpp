#include <stdexcept>

#include "splinebound/analysis.hpp"

namespace splinebound {

namespace {

struct Curve {
  std::string name;
  BoundFn bound;
  enum Kind { relative, abs_relative, error_below, error_above } kind;
};

Dataset tabulate(int id, std::string title, const std::vector<Curve>& curves, const Grid& grid, int digits) {
  Dataset d;
  d.id = std::to_string(id);
  d.title = std::move(title);
  d.columns.push_back("x");
  for (const auto& c : curves) d.columns.push_back(c.name);
  std::vector<Evaluator> evs;
  std::vector<Reference> refs;
  for (const auto& c : curves) {
    evs.push_back(c.bound.make_evaluator(digits));
    refs.push_back(reference_for(c.bound.target));
  }
  for (int i = 0; i < grid.count; ++i) {
    const PiRational xe = grid.exact_point(i);
    const ExtReal x = to_ext_real(xe, digits);
    std::vector<ExtReal> row{x};
    for (std::size_t j = 0; j < curves.size(); ++j) {
      switch (curves[j].kind) {
        case Curve::relative:
          row.push_back(relative_error(evs[j], refs[j], xe, digits));
          break;
        case Curve::abs_relative:
          row.push_back(abs(relative_error(evs[j], refs[j], xe, digits)));
          break;
        case Curve::error_below:
          row.push_back(refs[j].value(x) - evs[j].value(x));
          break;
        case Curve::error_above:
          row.push_back(evs[j].value(x) - refs[j].value(x));
          break;
      }
    }
    d.rows.push_back(std::move(row));
  }
  return d;
}

std::string side(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

}  // namespace

Dataset figure_data(int id, const Grid& grid, int digits) {
  grid.validate();
  std::vector<Curve> curves;
  std::string title;
  switch (id) {
    case 1:
      title = "magnitude of relative error, published sin(x)/x bounds";
      for (int row : {1, 2, 4, 5, 8, 10}) {
        for (Direction d : {Direction::lower, Direction::upper}) {
          curves.push_back({"table11_" + std::to_string(row) + "_" + side(d), table11_bound(row, d), Curve::abs_relative});
        }
      }
      break;
    case 2:
      title = "relative error, Zhu bounds of orders 0 to 2";
      for (int n = 0; n <= 2; ++n) {
        for (Direction d : {Direction::lower, Direction::upper}) {
          curves.push_back({"zhu_" + std::to_string(n) + "_" + side(d), zhu_explicit(n, d), Curve::relative});
        }
      }
      break;
    case 3:
      title = "relative error, spline orders 1 to 4 and Taylor orders 1 to 9";
      for (int n = 1; n <= 4; ++n) curves.push_back({"spline_" + std::to_string(n), sine_lower(n), Curve::relative});
      for (int k : {1, 3, 5, 7, 9}) curves.push_back({"taylor_" + std::to_string(k), taylor_sine(k), Curve::relative});
      break;
    case 4:
      title = "error sin(x) - f_k(x), k = 1..4";
      for (int n = 1; n <= 4; ++n) curves.push_back({"eps_" + std::to_string(n), sine_lower(n), Curve::error_below});
      break;
    case 5:
      title = "relative error, first-order series, 1 to 9 terms";
      for (int n = 1; n <= 9; ++n) {
        curves.push_back({"terms_" + std::to_string(n), sine_series_approx(SeriesVariant::order1, n), Curve::relative});
      }
      break;
    case 6:
      title = "relative error, second-order series, 2 to 9 terms";
      for (int n = 2; n <= 9; ++n) {
        curves.push_back({"terms_" + std::to_string(n), sine_series_approx(SeriesVariant::order2, n), Curve::relative});
      }
      break;
    case 7:
      title = "error f_k^U(x) - sin(x), k = 2..4";
      for (int n = 2; n <= 4; ++n) curves.push_back({"eps_upper_" + std::to_string(n), sine_upper(n), Curve::error_above});
      break;
    case 8:
      title = "relative error, Si lower bounds of orders 1 to 4 and Lv";
      for (int n = 1; n <= 4; ++n) curves.push_back({"si_" + std::to_string(n), si_lower(n), Curve::relative});
      curves.push_back({"lv", lv_si_lower(), Curve::relative});
      break;
    default:
      throw std::invalid_argument("unknown figure id " + std::to_string(id) + " (known: 1..8)");
  }
  return tabulate(id, title, curves, grid, digits);
}

}  // namespace splinebound
