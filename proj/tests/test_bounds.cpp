#include "doctest.h"

#include <algorithm>
#include <set>

#include "splinebound/analysis.hpp"
#include "splinebound/bounds.hpp"

using namespace splinebound;

namespace {

PiRational half_pi() { return PiRational::pi_power(1, mpq_class(1, 2)); }

ExtReal val(const std::string& s, int digits = 60) { return ExtReal::from_string(s, digits); }

bool close_to(const ExtReal& a, const ExtReal& b, const std::string& tol) {
  return abs(a - b) < ExtReal::from_string(tol, a.digits());
}

}  // namespace

TEST_CASE("lower bounds are sharp at both ends") {
  for (int n : {0, 1, 2, 5, 8}) {
    const ExactPoly p = *sine_lower(n).poly;
    CHECK(exact_eval(p, PiRational()).is_zero());
    CHECK(exact_eval(p, half_pi()) == PiRational(1L));
  }
  for (int n : {2, 3, 4, 8}) {
    const ExactPoly p = *sine_upper(n).poly;
    CHECK(exact_eval(p, PiRational()).is_zero());
    CHECK(exact_eval(p, half_pi()) == PiRational(1L));
  }
}

TEST_CASE("upper bound construction") {
  CHECK_THROWS_AS(sine_upper(1), std::invalid_argument);
  const ExtReal x = val("1.0");
  CHECK(sine_upper(2).eval(x) > sin(x));
  CHECK(sine_lower(1).eval(val("0.7853981633974483")) < sin(val("0.7853981633974483")));
  CHECK(*sine_upper(3).poly == *sine_lower(3).poly * PiRational(2L) - *sine_lower(2).poly);
}

TEST_CASE("ordering chain lower < lower < sin < upper") {
  const Grid g = Grid::standard(400);
  for (int n : {2, 3, 4}) {
    const Evaluator prev = sine_lower(n - 1).make_evaluator(60);
    const Evaluator cur = sine_lower(n).make_evaluator(60);
    const Evaluator up = sine_upper(n).make_evaluator(60);
    int bad = 0;
    for (int i = 1; i + 1 < g.count; ++i) {
      const ExtReal x = g.point(i, 60);
      const ExtReal s = sin(x);
      if (!(prev.value(x) < cur.value(x) && cur.value(x) < s && s < up.value(x))) ++bad;
    }
    CHECK_MESSAGE(bad == 0, "order " << n);
  }
}

TEST_CASE("upper error is eps_{n-1} - 2 eps_n") {
  for (int n : {2, 3, 4}) {
    for (const char* xs : {"0.1", "0.7", "1.3", "1.55"}) {
      const ExtReal x = val(xs);
      const ExtReal s = sin(x);
      const ExtReal eu = sine_upper(n).eval(x) - s;
      const ExtReal e_prev = s - sine_lower(n - 1).eval(x);
      const ExtReal e_cur = s - sine_lower(n).eval(x);
      CHECK(close_to(eu, e_prev - e_cur * ExtReal(2L, 60), "1e-50"));
    }
  }
}

TEST_CASE("cosine reflection is exact") {
  for (int n : {1, 2, 4}) {
    const auto s = *sine_lower(n).poly;
    const auto c = *reflect_to_cos(sine_lower(n)).poly;
    CHECK(exact_eval(c, PiRational()) == PiRational(1L));
    for (int j : {1, 7, 13, 29}) {
      const PiRational y = half_pi() * mpq_class(j, 31);
      CHECK(exact_eval(c, y) == exact_eval(s, half_pi() - y));
    }
  }
  CHECK(reflect_to_cos(sine_upper(2)).direction == Direction::upper);
  CHECK_THROWS_AS(reflect_to_cos(si_lower(2)), std::invalid_argument);
}

TEST_CASE("sine integral reference") {
  CHECK(si_reference(ExtReal::zero(40), 40).is_zero());
  CHECK(si_reference(to_ext_real(half_pi(), 40), 40).to_string(25) == "1.370762168154488480069678");
  CHECK(si_reference(val("0.5", 40), 40).to_string(25) == "4.931074180430666891616267e-1");
  CHECK(si_reference(val("0.5", 40), 40) < si_reference(val("1.0", 40), 40));
}

TEST_CASE("sine integral lower bounds") {
  for (int n : {0, 1, 4}) CHECK(exact_eval(*si_lower(n).poly, PiRational()).is_zero());
  // 1 - h_4(pi/2)/Si(pi/2) stays under the table's 1.28e-8
  const ExtReal x = to_ext_real(half_pi(), 50);
  const ExtReal re = ExtReal(1L, 50) - si_lower(4).eval(x) / si_reference(x, 50);
  CHECK(re > ExtReal::zero(50));
  CHECK(re < val("1.29e-8", 50));
}

TEST_CASE("Taylor bounds") {
  CHECK_THROWS_AS(taylor_sine(4), std::invalid_argument);
  CHECK_THROWS_AS(taylor_sine(-1), std::invalid_argument);
  CHECK(taylor_sine(1).direction == Direction::upper);
  CHECK(taylor_sine(3).direction == Direction::lower);
  CHECK(taylor_sine(5).direction == Direction::upper);
  const ExtReal x = to_ext_real(half_pi(), 40);
  const ExtReal re = ExtReal(1L, 40) - taylor_sine(1).eval(x) / sin(x);
  CHECK(abs(re).to_string(3) == "5.71e-1");
  CHECK(taylor_sine(9).eval(ExtReal::zero(40)).is_zero());
}

TEST_CASE("sufficiency margins") {
  const auto cert = sufficiency_check(50);
  CHECK(cert.all_positive);
  REQUIRE(cert.margins.size() == 49);
  // (pi - 3) - 2 * 0.0125144
  CHECK(to_ext_real(cert.margins[0], 30).to_string(4) == "1.166e-1");
  for (std::size_t i = 1; i < cert.margins.size(); ++i) CHECK(sign(cert.margins[i - 1] - cert.margins[i]) > 0);
  CHECK_THROWS_AS(sufficiency_check(1), std::invalid_argument);
}

TEST_CASE("Zhu recurrence agrees with the explicit forms") {
  const auto a = zhu_alphas(4);
  CHECK(a[0] == PiRational::pi_power(-1, 2));
  CHECK(a[1] == PiRational::pi_power(-3, 1));
  for (int n = 0; n <= 2; ++n) {
    for (Direction d : {Direction::lower, Direction::upper}) {
      const auto r = to_decimal_poly(*zhu_bound(n, d).poly, 40);
      const auto e = to_decimal_poly(*zhu_explicit(n, d).poly, 40);
      REQUIRE(r.degree() == e.degree());
      for (int k = 0; k <= r.degree(); ++k) {
        CHECK_MESSAGE(abs(r.coefficient(k) - e.coefficient(k)).to_double() < 1e-30, "order " << n << " power " << k);
      }
    }
  }
  const ExtReal x = to_ext_real(half_pi(), 40);
  CHECK(close_to(zhu_bound(0, Direction::lower).eval(x), ExtReal(2L, 40) / pi(40), "1e-35"));
}

TEST_CASE("published bounds at the endpoints") {
  const ExtReal zero = ExtReal::zero(40);
  const ExtReal end = to_ext_real(half_pi(), 40);
  CHECK(close_to(table11_bound(1, Direction::lower).eval(zero), ExtReal(1L, 40), "1e-35"));
  CHECK(close_to(table11_bound(3, Direction::lower).eval(end), ExtReal(2L, 40) / pi(40), "1e-35"));
  CHECK(close_to(table11_bound(5, Direction::lower).eval(zero), ExtReal(1L, 40), "1e-35"));
  CHECK(close_to(jordan_bound(Direction::lower).eval(end), ExtReal(2L, 40) / pi(40), "1e-35"));
  CHECK_THROWS_AS(table11_bound(11, Direction::lower), std::invalid_argument);
}

TEST_CASE("catalog direction certification") {
  // Rows 7 and 10 fail as printed (rounded p0, and k0's denominator); every
  // other entry, Hua included, holds on the grid.
  const std::set<std::string> known{"table11_7:7:lower:sinc", "table11_10:10:lower:sinc"};
  std::set<std::string> failing;
  for (const auto& b : baseline_catalog()) {
    const auto rep = re_bound_scan(b, Grid::standard(1000), 0, 50);
    if (rep.violations) failing.insert(b.id());
  }
  CHECK(failing == known);
}

TEST_CASE("spline bounds certify through order 8") {
  const Grid g = Grid::standard(1000);
  for (int n = 0; n <= 8; ++n) {
    std::vector<BoundFn> bs{sine_lower(n), reflect_to_cos(sine_lower(n)), si_lower(n), to_sinc(sine_lower(n))};
    if (n >= 2) {
      bs.push_back(sine_upper(n));
      bs.push_back(reflect_to_cos(sine_upper(n)));
    }
    for (const auto& b : bs) CHECK_MESSAGE(re_bound_scan(b, g).violations == 0, b.id());
  }
}
