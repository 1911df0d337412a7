#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splinebound/bounds.hpp"

namespace splinebound {

/// count equally spaced points, both endpoints included.
struct Grid {
  PiRational left;
  PiRational right = PiRational::pi_power(1, mpq_class(1, 2));
  int count = 1000;

  /// Throws std::invalid_argument for count < 2 or right <= left.
  void validate() const;
  PiRational exact_point(int i) const;
  ExtReal point(int i, int digits) const;
  std::vector<ExtReal> points(int digits) const;

  /// [0, pi/2] with 1000 points.
  static Grid standard(int count = 1000);
};

/// True function a bound is measured against.
struct Reference {
  Target target = Target::sin;
  RealFn value;
  RealFn derivative;
  /// Where value vanishes; relative error there is the derivative-ratio limit.
  std::optional<PiRational> zero;
};

/// sin, sin(x)/x, cos or Si on [0, pi/2].
Reference reference_for(Target target);

struct RelErrReport {
  std::string bound_id;
  Grid grid;
  int digits = kDefaultDigits;
  std::vector<ExtReal> re_values;
  ExtReal re_bound;
  ExtReal argmax;
  int argmax_index = 0;
  /// Grid points on the wrong side for the bound's declared direction.
  int violations = 0;
  std::vector<int> violation_indices;
};

/// 1 - approx(x)/reference(x); at the reference's declared zero the limit
/// 1 - approx'(x)/reference'(x). Throws std::domain_error when the
/// reference vanishes with no declared limit.
ExtReal relative_error(const Evaluator& approx, const Reference& reference, const PiRational& x, int digits);
ExtReal relative_error(const BoundFn& approx, const Reference& reference, const PiRational& x, int digits);

/// Working precision able to resolve a relative error of `expected`:
/// max(50, 2 ceil(-log10 expected) + 20).
int escalated_digits(const ExtReal& expected);

/// Full grid scan. digits = 0 picks the context automatically, starting at
/// min_digits and rescanning whenever the measured bound calls for more
/// digits than were used.
RelErrReport re_bound_scan(const BoundFn& approx, const Reference& reference, const Grid& grid, int digits = 0,
                           int min_digits = kDefaultDigits);
RelErrReport re_bound_scan(const BoundFn& approx, const Grid& grid, int digits = 0,
                           int min_digits = kDefaultDigits);

struct ScaleCheckReport {
  int points = 0;
  ExtReal max_difference;  ///< max |re_x(x) - re_t(2x/pi)|
};

/// Relative error of a sin polynomial computed in x and, separately, of its
/// t = 2x/pi form against sin(pi t/2).
ScaleCheckReport scale_check(const BoundFn& f_in_x, const Grid& grid, int digits);

struct TableRow {
  std::string row;      ///< order or term count
  std::string column;   ///< which approximant family
  std::string label;    ///< direction or note printed next to the value
  std::optional<std::string> expected;  ///< as printed, absent for a blank published cell
  std::optional<ExtReal> computed;
  int digits = 0;       ///< working precision used
  bool pass = true;
  std::string note;
};

struct TableResult {
  std::string id;
  std::vector<TableRow> rows;
  bool all_pass() const;
};

/// Known ids: "2.1", "3.1", "5.1", "5.2". Throws std::invalid_argument
/// otherwise. Each cell is compared to 3 significant figures.
TableResult reproduce_table(const std::string& id, int samples = 1000);
std::vector<std::string> table_ids();

/// True when both values round to the same `sig` significant figures.
bool matches_to_sig_figs(const ExtReal& computed, const std::string& expected, int sig);

struct Dataset {
  std::string id;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<ExtReal>> rows;
};

/// Columns of the curves behind figure 1..8; first column is the abscissa.
Dataset figure_data(int id, const Grid& grid, int digits = kDefaultDigits);

}  // namespace splinebound
