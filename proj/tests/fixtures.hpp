// Hand-typed reference polynomials on [0, pi/2], used by the unit and
// acceptance tests. Coefficients are written as lead/pi^p [1 + a1 pi + a2 pi^2 ...].
#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "splinebound/poly.hpp"

namespace fixtures {

using splinebound::ExactPoly;
using splinebound::PiRational;
using splinebound::Variable;

inline mpq_class q(long num, long den = 1) { return mpq_class(num, den); }

inline PiRational bracket(const mpq_class& lead, int p, std::initializer_list<mpq_class> inner) {
  PiRational body(1L);
  int j = 1;
  for (const auto& a : inner) body += PiRational(a, j++);
  return body * PiRational(lead, -p);
}

struct Term {
  int power;
  PiRational coeff;
};

inline ExactPoly poly(std::initializer_list<Term> terms) {
  int deg = 0;
  for (const auto& t : terms) deg = std::max(deg, t.power);
  std::vector<PiRational> c(static_cast<std::size_t>(deg) + 1);
  for (const auto& t : terms) c[static_cast<std::size_t>(t.power)] += t.coeff;
  return ExactPoly(std::move(c), Variable::X_on_0_halfpi);
}

inline PiRational dec(const char* s) { return PiRational::from_decimal(s); }

// sine splines, orders 0..4
inline std::vector<ExactPoly> sine_splines() {
  return {
      poly({{1, PiRational(q(2), -1)}}),
      poly({{1, 1L}, {2, bracket(q(12), 2, {q(-1, 3)})}, {3, bracket(q(-16), 3, {q(-1, 4)})}}),
      poly({{1, 1L},
            {3, bracket(q(80), 3, {q(-3, 10), q(-1, 80)})},
            {4, bracket(q(-240), 4, {q(-4, 15), q(-1, 60)})},
            {5, bracket(q(192), 5, {q(-1, 4), q(-1, 48)})}}),
      poly({{1, 1L},
            {3, q(-1, 6)},
            {4, bracket(q(560), 4, {q(-2, 7), q(-1, 56), q(1, 420)})},
            {5, bracket(q(-2688), 5, {q(-15, 56), q(-1, 48), q(1, 672)})},
            {6, bracket(q(4480), 6, {q(-9, 35), q(-13, 560), q(1, 840)})},
            {7, bracket(q(-2560), 7, {q(-1, 4), q(-1, 40), q(1, 960)})}}),
      poly({{1, 1L},
            {3, q(-1, 6)},
            {5, bracket(q(4032), 5, {q(-5, 18), q(-1, 48), q(5, 2016), q(1, 48384)})},
            {6, bracket(q(-26880), 6, {q(-4, 15), q(-11, 480), q(1, 504), q(1, 40320)})},
            {7, bracket(q(69120), 7, {q(-7, 27), q(-53, 2160), q(1, 576), q(1, 34560)})},
            {8, bracket(q(-80640), 8, {q(-16, 63), q(-13, 504), q(1, 630), q(1, 30240)})},
            {9, bracket(q(35840), 9, {q(-1, 4), q(-3, 112), q(1, 672), q(1, 26880)})}}),
  };
}

// cosine forms in y, orders 1..4 (index 0 unused)
inline std::vector<ExactPoly> cosine_splines() {
  return {
      ExactPoly(),
      poly({{0, 1L}, {2, bracket(q(-12), 2, {q(-1, 6)})}, {3, bracket(q(16), 3, {q(-1, 4)})}}),
      poly({{0, 1L},
            {2, q(-1, 2)},
            {3, bracket(q(-80), 3, {q(-1, 5), q(-3, 80)})},
            {4, bracket(q(240), 4, {q(-7, 30), q(-1, 40)})},
            {5, bracket(q(-192), 5, {q(-1, 4), q(-1, 48)})}}),
      poly({{0, 1L},
            {2, q(-1, 2)},
            {4, bracket(q(-560), 4, {q(-3, 14), q(-1, 28), q(1, 1680)})},
            {5, bracket(q(2688), 5, {q(-13, 56), q(-5, 168), q(1, 1344)})},
            {6, bracket(q(-4480), 6, {q(-17, 70), q(-3, 112), q(1, 1120)})},
            {7, bracket(q(2560), 7, {q(-1, 4), q(-1, 40), q(1, 960)})}}),
      poly({{0, 1L},
            {2, q(-1, 2)},
            {4, q(1, 24)},
            {5, bracket(q(-4032), 5, {q(-2, 9), q(-5, 144), q(1, 1008), q(5, 48384)})},
            {6, bracket(q(26880), 6, {q(-7, 30), q(-1, 32), q(23, 20160), q(1, 16128)})},
            {7, bracket(q(-69120), 7, {q(-13, 54), q(-7, 240), q(11, 8640), q(1, 20736)})},
            {8, bracket(q(80640), 8, {q(-31, 126), q(-1, 36), q(1, 720), q(1, 24192)})},
            {9, bracket(q(-35840), 9, {q(-1, 4), q(-3, 112), q(1, 672), q(1, 26880)})}}),
  };
}

// 2 f_2 - f_1
inline ExactPoly sine_upper2() {
  return poly({{1, 1L},
               {2, bracket(q(-12), 2, {q(-1, 3)})},
               {3, bracket(q(176), 3, {q(-13, 44), q(-1, 88)})},
               {4, bracket(q(-480), 4, {q(-4, 15), q(-1, 60)})},
               {5, bracket(q(384), 5, {q(-1, 4), q(-1, 48)})}});
}

// 2 g_2 - g_1
inline ExactPoly cosine_upper2() {
  return poly({{0, 1L},
               {2, bracket(q(12), 2, {q(-1, 6), q(-1, 12)})},
               {3, bracket(q(-176), 3, {q(-9, 44), q(-3, 88)})},
               {4, bracket(q(480), 4, {q(-7, 30), q(-1, 40)})},
               {5, bracket(q(-384), 5, {q(-1, 4), q(-1, 48)})}});
}

// Si lower bounds, orders 1..4 (index 0 unused). The order-2 x^3 term uses
// pi^3; term-wise integration of the order-2 sine spline requires it.
inline std::vector<ExactPoly> si_lowers() {
  return {
      ExactPoly(),
      poly({{1, 1L}, {2, bracket(q(6), 2, {q(-1, 3)})}, {3, bracket(q(-16, 3), 3, {q(-1, 4)})}}),
      poly({{1, 1L},
            {3, bracket(q(80, 3), 3, {q(-3, 10), q(-1, 80)})},
            {4, bracket(q(-60), 4, {q(-4, 15), q(-1, 60)})},
            {5, bracket(q(192, 5), 5, {q(-1, 4), q(-1, 48)})}}),
      poly({{1, 1L},
            {3, q(-1, 18)},
            {4, bracket(q(140), 4, {q(-2, 7), q(-1, 56), q(1, 420)})},
            {5, bracket(q(-2688, 5), 5, {q(-15, 56), q(-1, 48), q(1, 672)})},
            {6, bracket(q(2240, 3), 6, {q(-9, 35), q(-13, 560), q(1, 840)})},
            {7, bracket(q(-2560, 7), 7, {q(-1, 4), q(-1, 40), q(1, 960)})}}),
      poly({{1, 1L},
            {3, q(-1, 18)},
            {5, bracket(q(4032, 5), 5, {q(-5, 18), q(-1, 48), q(5, 2016), q(1, 48384)})},
            {6, bracket(q(-4480), 6, {q(-4, 15), q(-11, 480), q(1, 504), q(1, 40320)})},
            {7, bracket(q(69120, 7), 7, {q(-7, 27), q(-53, 2160), q(1, 576), q(1, 34560)})},
            {8, bracket(q(-10080), 8, {q(-16, 63), q(-13, 504), q(1, 630), q(1, 30240)})},
            {9, bracket(q(35840, 9), 9, {q(-1, 4), q(-3, 112), q(1, 672), q(1, 26880)})}}),
  };
}

struct Kernel {
  int order;
  ExactPoly poly;
  std::string claimed_re_bound;
};

// Sine kernels with coefficients rounded as published, and the relative
// error bound claimed for each.
inline std::vector<Kernel> rounded_kernels() {
  return {
      {2, poly({{1, 1L}, {3, q(-1699, 10000)}, {4, q(11, 2000)}, {5, q(7, 1250)}}), "6.59e-4"},
      {4,
       poly({{1, 1L},
             {3, q(-1, 6)},
             {5, dec("8.33165e-3")},
             {6, dec("5.17e-6")},
             {7, dec("-2.0463e-4")},
             {8, dec("3.55e-6")},
             {9, dec("1.89e-6")}}),
       "4.31e-7"},
      {6,
       poly({{1, 1L},
             {3, q(-1, 6)},
             {5, q(1, 120)},
             {7, dec("-1.98412876e-4")},
             {8, dec("7.78e-10")},
             {9, dec("2.754282e-6")},
             {10, dec("1.485e-9")},
             {11, dec("-2.5944e-8")},
             {12, dec("3.06e-10")},
             {13, dec("1.11e-10")}}),
       "4.39e-11"},
      {8,
       poly({{1, 1L},
             {3, q(-1, 6)},
             {5, q(1, 120)},
             {7, q(-1, 5040)},
             {9, dec("2.755731916334e-6")},
             {10, dec("3.43891e-14")},
             {11, dec("-2.50521948e-8")},
             {12, dec("1.26122e-13")},
             {13, dec("1.604729071e-10")},
             {14, dec("7.21759e-14")},
             {15, dec("-7.936185e-13")},
             {16, dec("7.0722e-15")},
             {17, dec("1.956e-15")}}),
       "5.66e-17"},
  };
}

inline PiRational pi_term(long num, long den, int power) { return PiRational(mpq_class(num, den), power); }

// closed forms of the order-1 error coefficients c_2 .. c_12
inline std::vector<PiRational> order1_closed_forms() {
  return {
      PiRational(-3L) + pi_term(1, 1, 1),
      PiRational(-4L) + pi_term(3, 2, 1) - pi_term(1, 48, 3),
      PiRational(-9L) + pi_term(7, 2, 1) - pi_term(1, 16, 3),
      PiRational(-15L) + pi_term(6, 1, 1) - pi_term(1, 8, 3) + pi_term(1, 3840, 5),
      PiRational(-7L) + pi_term(3, 1, 1) - pi_term(1, 12, 3) + pi_term(1, 1920, 5),
      PiRational(-8L) + pi_term(7, 2, 1) - pi_term(5, 48, 3) + pi_term(1, 1280, 5) - pi_term(1, 645120, 7),
      PiRational(-17L) + pi_term(15, 2, 1) - pi_term(11, 48, 3) + pi_term(7, 3840, 5) -
          pi_term(1, 215040, 7),
      PiRational(-27L) + pi_term(12, 1, 1) - pi_term(3, 8, 3) + pi_term(1, 320, 5) -
          pi_term(1, 107520, 7) + pi_term(1, 185794560, 9),
      PiRational(-11L) + pi_term(5, 1, 1) - pi_term(1, 6, 3) + pi_term(1, 640, 5) -
          pi_term(1, 161280, 7) + pi_term(1, 92897280, 9),
      PiRational(-12L) + pi_term(11, 2, 1) - pi_term(3, 16, 3) + pi_term(7, 3840, 5) -
          pi_term(1, 129024, 7) + pi_term(1, 61931520, 9) - pi_term(1, 81749606400L, 11),
      PiRational(-25L) + pi_term(23, 2, 1) - pi_term(19, 48, 3) + pi_term(1, 256, 5) -
          pi_term(11, 645120, 7) + pi_term(1, 26542080, 9) - pi_term(1, 27249868800L, 11),
  };
}

// closed forms of the order-2 error coefficients d_3 .. d_12
inline std::vector<PiRational> order2_closed_forms() {
  return {
      PiRational(-10L) + pi_term(3, 1, 1) + pi_term(1, 8, 2) - pi_term(1, 48, 3),
      PiRational(-15L) + pi_term(5, 1, 1) + pi_term(1, 8, 2) - pi_term(1, 16, 3),
      PiRational(-36L) + pi_term(25, 2, 1) + pi_term(1, 4, 2) - pi_term(3, 16, 3) + pi_term(1, 3840, 5),
      PiRational(-64L) + pi_term(23, 1, 1) + pi_term(3, 8, 2) - pi_term(19, 48, 3) + pi_term(1, 960, 5),
      PiRational(-36L) + pi_term(14, 1, 1) + pi_term(1, 8, 2) - pi_term(5, 16, 3) + pi_term(1, 640, 5) -
          pi_term(1, 645120, 7),
      PiRational(-45L) + pi_term(18, 1, 1) + pi_term(1, 8, 2) - pi_term(7, 16, 3) + pi_term(1, 384, 5) -
          pi_term(1, 215040, 7),
      PiRational(-100L) + pi_term(81, 2, 1) + pi_term(1, 4, 2) - pi_term(49, 48, 3) +
          pi_term(5, 768, 5) - pi_term(1, 71680, 7) + pi_term(1, 185794560, 9),
      PiRational(-166L) + pi_term(68, 1, 1) + pi_term(3, 8, 2) - pi_term(85, 48, 3) +
          pi_term(23, 1920, 5) - pi_term(19, 645120, 7) + pi_term(1, 46448640, 9),
      PiRational(-78L) + pi_term(33, 1, 1) + pi_term(1, 8, 2) - pi_term(15, 16, 3) + pi_term(7, 960, 5) -
          pi_term(1, 43008, 7) + pi_term(1, 30965760, 9) - pi_term(1, 81749606400L, 11),
      PiRational(-91L) + pi_term(39, 1, 1) + pi_term(1, 8, 2) - pi_term(55, 48, 3) + pi_term(3, 320, 5) -
          pi_term(1, 30720, 7) + pi_term(1, 18579456, 9) - pi_term(1, 27249868800L, 11),
  };
}

}  // namespace fixtures
