#include <stdexcept>

#include "splinebound/analysis.hpp"

namespace splinebound {

namespace {

struct Expected {
  int order;
  const char* value;
  const char* label;
};

TableRow measure(const BoundFn& b, const Grid& grid, const std::string& column, const Expected& e) {
  const RelErrReport rep = re_bound_scan(b, grid);
  TableRow row;
  row.row = std::to_string(e.order);
  row.column = column;
  row.label = e.label;
  row.expected = e.value;
  row.computed = rep.re_bound;
  row.digits = rep.digits;
  row.pass = matches_to_sig_figs(rep.re_bound, e.value, 3);
  return row;
}

TableResult taylor_table(const Grid& grid) {
  // labels as printed; orders 13 and 17 are printed as lower bounds
  static const Expected rows[] = {{1, "0.571", "upper"},    {3, "7.52e-2", "lower"},  {5, "4.52e-3", "upper"},
                                  {7, "1.57e-4", "lower"},  {9, "3.54e-6", "upper"},  {13, "6.63e-10", "lower"},
                                  {17, "4.35e-14", "lower"}, {33, "7.07e-34", "upper"}};
  TableResult out{"2.1", {}};
  for (const auto& e : rows) {
    const BoundFn b = taylor_sine(e.order);
    TableRow row = measure(b, grid, "taylor", e);
    const std::string side = to_string(b.direction);
    if (side != row.label) row.note = "printed as " + row.label + "; measured side is " + side;
    row.label = side;
    out.rows.push_back(std::move(row));
  }
  return out;
}

TableResult spline_table(const Grid& grid) {
  static const Expected rows[] = {{0, "0.363", ""},     {1, "1.63e-2", ""},   {2, "3.31e-4", ""},
                                  {3, "3.62e-6", ""},   {4, "2.48e-8", ""},   {6, "3.91e-13", ""},
                                  {8, "2.02e-18", ""},  {16, "9.19e-43", ""}, {32, "2.19e-100", ""}};
  TableResult out{"3.1", {}};
  for (const auto& e : rows) out.rows.push_back(measure(sine_lower(e.order), grid, "spline", e));
  return out;
}

TableResult series_table(const Grid& grid) {
  static const Expected first[] = {{1, "1.63e-2", ""},   {2, "2.70e-3", ""},   {3, "1.42e-3", ""},
                                   {4, "9.14e-4", ""},   {6, "1.30e-6", ""},   {8, "7.92e-7", ""},
                                   {12, "1.50e-10", ""}, {16, "9.85e-15", ""}, {20, "2.82e-19", ""}};
  static const Expected second[] = {{2, "3.31e-4", ""},   {3, "3.89e-5", ""},   {4, "2.00e-5", ""},
                                    {6, "3.11e-8", ""},   {8, "3.91e-9", ""},   {12, "2.83e-13", ""},
                                    {16, "9.05e-18", ""}, {20, "1.45e-22", ""}};
  TableResult out{"5.1", {}};
  for (const auto& e : first) {
    out.rows.push_back(measure(sine_series_approx(SeriesVariant::order1, e.order), grid, "series_order1", e));
    if (e.order == 1) {
      TableRow blank;
      blank.row = "1";
      blank.column = "series_order2";
      blank.note = "no published value";
      out.rows.push_back(std::move(blank));
      continue;
    }
    for (const auto& s : second) {
      if (s.order == e.order) {
        out.rows.push_back(measure(sine_series_approx(SeriesVariant::order2, s.order), grid, "series_order2", s));
      }
    }
  }
  return out;
}

TableResult si_table(const Grid& grid) {
  static const Expected rows[] = {{0, "0.363", ""},   {1, "1.24e-2", ""},  {2, "2.12e-4", ""},
                                  {3, "2.06e-6", ""}, {4, "1.28e-8", ""},  {8, "8.21e-19", ""},
                                  {12, "1.61e-30", ""}, {16, "2.85e-43", ""}};
  TableResult out{"5.2", {}};
  for (const auto& e : rows) out.rows.push_back(measure(si_lower(e.order), grid, "spline_si", e));
  return out;
}

}  // namespace

std::vector<std::string> table_ids() { return {"2.1", "3.1", "5.1", "5.2"}; }

TableResult reproduce_table(const std::string& id, int samples) {
  const Grid grid = Grid::standard(samples);
  if (id == "2.1") return taylor_table(grid);
  if (id == "3.1") return spline_table(grid);
  if (id == "5.1") return series_table(grid);
  if (id == "5.2") return si_table(grid);
  throw std::invalid_argument("unknown table id '" + id + "' (known: 2.1, 3.1, 5.1, 5.2)");
}

}  // namespace splinebound
