// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "splinebound/analysis.hpp"

using namespace splinebound;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome table_check(const std::string& id) {
  const TableResult t = reproduce_table(id, 1000);
  Outcome o;
  int compared = 0;
  int matched = 0;
  std::ostringstream bad;
  for (const auto& r : t.rows) {
    if (!r.expected) continue;
    ++compared;
    if (r.pass) {
      ++matched;
    } else {
      bad << " " << r.column << "/" << r.row << "=" << (r.computed ? r.computed->to_string(4) : "-") << " vs "
          << *r.expected;
    }
  }
  o.pass = t.all_pass();
  o.detail = "table " + id + ": " + std::to_string(matched) + "/" + std::to_string(compared) +
             " cells at 3 significant figures" + bad.str();
  return o;
}

Outcome exact_fixtures() {
  int total = 0;
  std::vector<std::string> bad;
  const auto expect = [&](const std::string& what, const ExactPoly& got, const ExactPoly& want) {
    ++total;
    if (!(got == want)) bad.push_back(what);
  };
  const auto f = fixtures::sine_splines();
  for (int n = 0; n <= 4; ++n) expect("sine " + std::to_string(n), sine_spline(n).poly, f[n]);
  const auto g = fixtures::cosine_splines();
  for (int n = 1; n <= 4; ++n) expect("cos " + std::to_string(n), *reflect_to_cos(sine_lower(n)).poly, g[n]);
  const auto h = fixtures::si_lowers();
  for (int n = 1; n <= 4; ++n) expect("si " + std::to_string(n), *si_lower(n).poly, h[n]);
  expect("sine upper 2", *sine_upper(2).poly, fixtures::sine_upper2());
  expect("cos upper 2", *reflect_to_cos(sine_upper(2)).poly, fixtures::cosine_upper2());
  Outcome o;
  o.pass = bad.empty();
  o.detail = std::to_string(total - static_cast<int>(bad.size())) + "/" + std::to_string(total) +
             " polynomials structurally equal";
  for (const auto& b : bad) o.detail += "; mismatch " + b;
  return o;
}

Outcome recurrences() {
  Outcome o;
  const auto c = order1_coefficients(12).coeffs;
  const auto d = order2_coefficients(12).coeffs;
  const auto cf = fixtures::order1_closed_forms();
  const auto df = fixtures::order2_closed_forms();
  int exact = 0;
  for (std::size_t i = 0; i < cf.size(); ++i) exact += c[i + 2] == cf[i];
  for (std::size_t i = 0; i < df.size(); ++i) exact += d[i + 3] == df[i];
  const int closed_total = static_cast<int>(cf.size() + df.size());

  // printed decimals; compared at min(6, digits printed) significant figures
  struct Dec {
    const PiRational* value;
    const char* text;
    int sig;
  };
  const std::vector<Dec> decimals = {
      {&c[2], "0.14159", 5},   {&c[3], "0.0664249", 6}, {&c[4], "0.057682", 5},
      {&c[5], "0.053464", 5},  {&c[6], "3.06823e-4", 6}, {&c[7], "1.49925e-4", 6},
      {&d[3], "0.0125144", 6}, {&d[4], "0.00377153", 6}, {&d[5], "0.003325", 4},
      {&d[6], "3.18534e-3", 6}, {&d[7], "1.02411e-5", 6},
  };
  int dec_ok = 0;
  std::string bad;
  for (const auto& e : decimals) {
    if (matches_to_sig_figs(to_ext_real(*e.value, 40), e.text, e.sig)) {
      ++dec_ok;
    } else {
      bad += std::string(" ") + e.text;
    }
  }
  o.pass = exact == closed_total && dec_ok == static_cast<int>(decimals.size());
  o.detail = std::to_string(exact) + "/" + std::to_string(closed_total) + " closed forms exact for k <= 12, " +
             std::to_string(dec_ok) + "/" + std::to_string(decimals.size()) + " decimals" + bad;
  return o;
}

Outcome property_suites() {
  std::vector<std::string> notes;
  bool pass = true;

  // (a) positivity and strict decay to k = 60
  bool a = true;
  for (const auto& s : {order1_coefficients(60), order2_coefficients(60)}) {
    for (int k = s.start_index; k <= 60; ++k) {
      a = a && sign(s.coeffs[k]) > 0;
      if (k > s.start_index) a = a && sign(s.coeffs[k - 1] - s.coeffs[k]) > 0;
    }
  }
  notes.push_back(std::string("(a) ") + (a ? "ok" : "FAIL"));
  pass = pass && a;

  // (b) sufficiency margins
  const bool b = sufficiency_check(50).all_positive;
  notes.push_back(std::string("(b) ") + (b ? "ok" : "FAIL"));
  pass = pass && b;

  // (c) grid direction certification through order 8
  const Grid grid = Grid::standard(1000);
  int bounds = 0;
  int violations = 0;
  for (int n = 0; n <= 8; ++n) {
    std::vector<BoundFn> bs{sine_lower(n), reflect_to_cos(sine_lower(n)), si_lower(n)};
    if (n >= 2) {
      bs.push_back(sine_upper(n));
      bs.push_back(reflect_to_cos(sine_upper(n)));
    }
    for (const auto& bf : bs) {
      ++bounds;
      violations += re_bound_scan(bf, grid).violations;
    }
  }
  notes.push_back("(c) " + std::to_string(bounds) + " bounds, " + std::to_string(violations) + " violations");
  pass = pass && violations == 0;

  // (d) series partial sums against direct errors on 101 points
  const int digits = 60;
  const ExtReal half_pi = pi(digits) / ExtReal(2L, digits);
  ExtReal worst = ExtReal::zero(digits);
  for (int order : {1, 2}) {
    const ErrorSeries s = order == 1 ? order1_coefficients(70) : order2_coefficients(70);
    const DecimalPoly ft = to_decimal_poly(x_to_t(sine_spline(order).poly), digits + 10);
    for (int i = 0; i <= 100; ++i) {
      const ExtReal t = ExtReal(static_cast<long>(i), digits) / ExtReal(100L, digits);
      const ExtReal direct = sin(half_pi * t) - horner_eval(ft, t, Variable::T_on_0_1);
      const ExtReal diff = abs(eval_error_series(s, t, 60) - direct);
      if (diff > worst) worst = diff;
    }
  }
  const bool d = worst < ExtReal::from_string("1e-25", digits);
  notes.push_back("(d) max |series - direct| = " + worst.to_string(3));
  pass = pass && d;

  // (e) monomial re-expansion against the Taylor error coefficients
  bool e = true;
  for (int order : {1, 2}) {
    const ErrorSeries s = order == 1 ? order1_coefficients(20) : order2_coefficients(20);
    const ExactPoly p = error_series_poly(s, 10);
    const auto taylor = taylor_error_coefficients(order, 10);
    for (int k = 0; k < 10; ++k) e = e && p.coefficient(k) == taylor[static_cast<std::size_t>(k)];
  }
  notes.push_back(std::string("(e) ") + (e ? "ok" : "FAIL"));
  pass = pass && e;

  Outcome o;
  o.pass = pass;
  for (const auto& n : notes) o.detail += (o.detail.empty() ? "" : "; ") + n;
  return o;
}

Outcome rounded_kernels() {
  Outcome o;
  int ok = 0;
  const auto kernels = fixtures::rounded_kernels();
  for (const auto& k : kernels) {
    BoundFn b;
    b.family = "kernel";
    b.order = k.order;
    b.direction = Direction::approximation;
    b.target = Target::sin;
    b.poly = k.poly;
    const RelErrReport rep = re_bound_scan(b, Grid::standard(1000));
    const bool match = matches_to_sig_figs(rep.re_bound, k.claimed_re_bound, 2);
    ok += match;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("order ") + std::to_string(k.order) + " " +
                rep.re_bound.to_string(5) + " vs " + k.claimed_re_bound + (match ? "" : " (mismatch)");
  }
  o.pass = ok == static_cast<int>(kernels.size());
  o.detail = std::to_string(ok) + "/" + std::to_string(kernels.size()) + " at 2 significant figures: " + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 spline lower-bound relative errors", [] { return table_check("3.1"); }},
      {"AC2 Taylor relative errors", [] { return table_check("2.1"); }},
      {"AC3 series relative errors", [] { return table_check("5.1"); }},
      {"AC4 sine integral relative errors", [] { return table_check("5.2"); }},
      {"AC5 exact coefficient fixtures", exact_fixtures},
      {"AC6 coefficient recurrences", recurrences},
      {"AC7 property suites", property_suites},
      {"AC8 rounded kernel certification", rounded_kernels},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " | " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
