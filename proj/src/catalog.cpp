#include <stdexcept>

#include "splinebound/bounds.hpp"

namespace splinebound {

namespace {

BoundFn closed(std::string family, int order, Direction direction, Target target, RealFn f,
               RealFn df = {}) {
  BoundFn b;
  b.family = std::move(family);
  b.order = order;
  b.direction = direction;
  b.target = target;
  b.closed_form = std::move(f);
  b.closed_form_derivative = std::move(df);
  return b;
}

BoundFn sinc_closed(int row, Direction direction, RealFn f) {
  return closed("table11_" + std::to_string(row), row, direction, Target::sinc, std::move(f));
}

ExtReal one(const ExtReal& x) { return ExtReal(1L, x.digits()); }
ExtReal num(long v, const ExtReal& x) { return ExtReal(v, x.digits()); }
ExtReal ratio(long p, long q, const ExtReal& x) { return ExtReal(p, x.digits()) / ExtReal(q, x.digits()); }

// 2 + k x^3 sin(x) - tan(x/2)^2/(x/2)^2, limit 1 at x = 0
ExtReal hua_form(const ExtReal& x, const ExtReal& k) {
  if (x.is_zero()) return one(x);
  const ExtReal half = x / num(2, x);
  const ExtReal q = tan(half) / half;
  return num(2, x) + k * pow(x, 3L) * sin(x) - q * q;
}

// (9 + 6 cos x)/(14 + cos x)
ExtReal chen_ratio(const ExtReal& x) { return (num(9, x) + num(6, x) * cos(x)) / (num(14, x) + cos(x)); }

// (2 + cos x - k x^2)/(3 - k x^2)
ExtReal chen_quadratic(const ExtReal& x, const ExtReal& k) {
  const ExtReal kx2 = k * x * x;
  return (num(2, x) + cos(x) - kx2) / (num(3, x) - kx2);
}

// pi^2 - 4 x^2
ExactPoly zhu_u() {
  return ExactPoly({PiRational::pi_power(2), PiRational(), PiRational(-4L)}, Variable::X_on_0_halfpi);
}

ExactPoly poly_sum(const std::vector<PiRational>& coeffs_in_u) {
  const ExactPoly u = zhu_u();
  ExactPoly out(Variable::X_on_0_halfpi);
  ExactPoly u_pow = ExactPoly::constant(PiRational(1L), Variable::X_on_0_halfpi);
  for (const auto& a : coeffs_in_u) {
    out += u_pow * a;
    u_pow *= u;
  }
  return out;
}

BoundFn zhu_poly(std::string family, int n, Direction direction, ExactPoly p) {
  BoundFn b;
  b.family = std::move(family);
  b.order = n;
  b.direction = direction;
  b.target = Target::sinc;
  b.poly = std::move(p);
  return b;
}

void require_side(Direction direction) {
  if (direction != Direction::lower && direction != Direction::upper) {
    throw std::invalid_argument("catalog bounds are lower or upper, got " + to_string(direction));
  }
}

}  // namespace

std::vector<PiRational> zhu_alphas(int count) {
  std::vector<PiRational> a;
  if (count > 0) a.push_back(PiRational::pi_power(-1, 2));
  if (count > 1) a.push_back(PiRational::pi_power(-3, 1));
  for (int k = 2; k < count; ++k) {
    const PiRational first = a[static_cast<std::size_t>(k - 1)] * PiRational(mpq_class(2 * k - 1, 2 * k), -2);
    const PiRational second = a[static_cast<std::size_t>(k - 2)] * PiRational(mpq_class(1, 16 * (k - 1) * k), -2);
    a.push_back(first - second);
  }
  return a;
}

BoundFn zhu_bound(int n, Direction direction) {
  require_side(direction);
  if (n < 0) throw std::invalid_argument("order must be >= 0");
  const auto alpha = zhu_alphas(n + 2);
  std::vector<PiRational> c(alpha.begin(), alpha.begin() + n + 1);
  if (direction == Direction::lower) {
    c.push_back(alpha[static_cast<std::size_t>(n + 1)]);
  } else {
    PiRational rest(1L);
    for (int k = 0; k <= n; ++k) rest -= alpha[static_cast<std::size_t>(k)] * PiRational::pi_power(2 * k);
    c.push_back(rest * PiRational::pi_power(-(2 * n + 2)));
  }
  return zhu_poly("zhu", n, direction, poly_sum(c));
}

BoundFn zhu_explicit(int n, Direction direction) {
  require_side(direction);
  const PiRational a0 = PiRational::pi_power(-1, 2);
  const PiRational a1 = PiRational::pi_power(-3);
  // (12 - pi^2)/(16 pi^5), (10 - pi^2)/(16 pi^7)
  const PiRational a2 = PiRational(mpq_class(3, 4), -5) - PiRational(mpq_class(1, 16), -3);
  const PiRational a3 = PiRational(mpq_class(5, 8), -7) - PiRational(mpq_class(1, 16), -5);
  std::vector<PiRational> c;
  const bool lower = direction == Direction::lower;
  switch (n) {
    case 0:
      // upper: (1 - 2/pi)/pi^2
      c = {a0, lower ? a1 : PiRational::pi_power(-2) - PiRational::pi_power(-3, 2)};
      break;
    case 1:
      // upper: (1 - 3/pi)/pi^4
      c = {a0, a1, lower ? a2 : PiRational::pi_power(-4) - PiRational::pi_power(-5, 3)};
      break;
    case 2:
      // upper: [1 - 3/pi - (12 - pi^2)/(16 pi)]/pi^6
      c = {a0, a1, a2,
           lower ? a3
                 : PiRational::pi_power(-6) - PiRational::pi_power(-7, 3) -
                       PiRational(mpq_class(3, 4), -7) + PiRational(mpq_class(1, 16), -5)};
      break;
    default:
      throw std::invalid_argument("explicit forms exist for orders 0..2 only");
  }
  return zhu_poly("zhu_explicit", n, direction, poly_sum(c));
}

BoundFn table11_bound(int row, Direction direction) {
  require_side(direction);
  const bool lower = direction == Direction::lower;
  switch (row) {
    case 1:
      if (lower) return sinc_closed(1, direction, [](const ExtReal& x) { return (one(x) + cos(x)) / num(2, x); });
      return sinc_closed(1, direction, [](const ExtReal& x) { return (num(2, x) + cos(x)) / num(3, x); });
    case 2:
      if (lower) return sinc_closed(2, direction, [](const ExtReal& x) { return pow(cos(x), ratio(1, 3, x)); });
      return sinc_closed(2, direction, [](const ExtReal& x) { return (num(2, x) + cos(x)) / num(3, x); });
    case 3:
      if (lower) {
        return sinc_closed(3, direction, [](const ExtReal& x) {
          const ExtReal p = pi(x.digits());
          const ExtReal alpha = p / (p - num(2, x));
          return (cos(x) + alpha - one(x)) / alpha;
        });
      }
      return sinc_closed(3, direction, [](const ExtReal& x) { return (cos(x) + num(2, x)) / num(3, x); });
    case 4:
      if (lower) {
        return sinc_closed(4, direction, [](const ExtReal& x) {
          const ExtReal x2 = x * x;
          return (one(x) - ratio(7, 60, x) * x2) / (one(x) + x2 / num(20, x));
        });
      }
      return sinc_closed(4, direction, [](const ExtReal& x) {
        const ExtReal x2 = x * x;
        return (one(x) - x2 / num(7, x) + ratio(11, 2520, x) * x2 * x2) / (one(x) + x2 / num(42, x));
      });
    case 5:
      if (lower) return sinc_closed(5, direction, [](const ExtReal& x) { return hua_form(x, ratio(23, 720, x)); });
      return sinc_closed(5, direction, [](const ExtReal& x) {
        const ExtReal p = pi(x.digits());
        const ExtReal p2 = p * p;
        const ExtReal k0 = num(128, x) - num(16, x) * p2 + num(16, x) * p;
        return hua_form(x, k0 / pow(p, 5L));
      });
    case 6:
      if (lower) {
        return sinc_closed(6, direction, [](const ExtReal& x) {
          const ExtReal p = pi(x.digits());
          return pow(num(2, x) / p, num(4, x) * x * x / (p * p));
        });
      }
      return sinc_closed(6, direction, [](const ExtReal& x) { return exp(-(x * x) / num(6, x)); });
    case 7:
      if (lower) {
        return sinc_closed(7, direction, [](const ExtReal& x) {
          const ExtReal p0 = ExtReal::from_string("0.3473", x.digits());
          return pow(cos(p0 * x), one(x) / p0);
        });
      }
      return sinc_closed(7, direction, [](const ExtReal& x) { return pow(cos(x / num(3, x)), 3L); });
    case 8:
      if (lower) {
        return sinc_closed(8, direction, [](const ExtReal& x) {
          const ExtReal p = num(28, x) / pi(x.digits());
          return (p + num(6, x) * cos(x)) / (num(14, x) + cos(x));
        });
      }
      return sinc_closed(8, direction, chen_ratio);
    case 9:
      if (lower) {
        return sinc_closed(9, direction, [](const ExtReal& x) {
          const ExtReal r = log(pi(x.digits()) / num(2, x)) / log(ratio(14, 9, x));
          return pow(chen_ratio(x), r);
        });
      }
      return sinc_closed(9, direction, chen_ratio);
    case 10:
      if (lower) {
        return sinc_closed(10, direction, [](const ExtReal& x) {
          const ExtReal p = pi(x.digits());
          const ExtReal k0 = (num(8, x) * p - num(24, x)) / (pow(p, 3L) - p * p);
          return chen_quadratic(x, k0);
        });
      }
      return sinc_closed(10, direction, [](const ExtReal& x) { return chen_quadratic(x, ratio(1, 10, x)); });
    default:
      throw std::invalid_argument("published-bound table has rows 1..10, got " + std::to_string(row));
  }
}

BoundFn jordan_bound(Direction direction) {
  require_side(direction);
  BoundFn b;
  b.family = "jordan";
  b.direction = direction;
  b.target = Target::sinc;
  b.poly = ExactPoly::constant(direction == Direction::lower ? PiRational::pi_power(-1, 2) : PiRational(1L),
                               Variable::X_on_0_halfpi);
  return b;
}

BoundFn cusa_huygens_upper() {
  return closed("cusa_huygens", 0, Direction::upper, Target::sinc,
                [](const ExtReal& x) { return (num(2, x) + cos(x)) / num(3, x); });
}

BoundFn redheffer_lower() {
  return closed("redheffer", 0, Direction::lower, Target::sinc, [](const ExtReal& x) {
    const ExtReal p2 = pi(x.digits()) * pi(x.digits());
    const ExtReal x2 = x * x;
    return (p2 - x2) / (p2 + x2);
  });
}

BoundFn lv_si_lower() {
  // (2x + sin x)/3 - (x^3 + 3x cos x - 3 sin x)/(9 pi^2)
  return closed(
      "lv_si", 0, Direction::lower, Target::si,
      [](const ExtReal& x) {
        const ExtReal p = pi(x.digits());
        const ExtReal s = sin(x);
        return (num(2, x) * x + s) / num(3, x) -
               (pow(x, 3L) + num(3, x) * x * cos(x) - num(3, x) * s) / (num(9, x) * p * p);
      },
      [](const ExtReal& x) {
        const ExtReal p = pi(x.digits());
        return (num(2, x) + cos(x)) / num(3, x) - (num(3, x) * x * x - num(3, x) * x * sin(x)) / (num(9, x) * p * p);
      });
}

std::vector<BoundFn> baseline_catalog() {
  std::vector<BoundFn> out;
  for (int row = 1; row <= 10; ++row) {
    out.push_back(table11_bound(row, Direction::lower));
    out.push_back(table11_bound(row, Direction::upper));
  }
  out.push_back(jordan_bound(Direction::lower));
  out.push_back(jordan_bound(Direction::upper));
  out.push_back(cusa_huygens_upper());
  out.push_back(redheffer_lower());
  for (int n = 0; n <= 2; ++n) {
    out.push_back(zhu_explicit(n, Direction::lower));
    out.push_back(zhu_explicit(n, Direction::upper));
  }
  for (int n = 0; n <= 4; ++n) {
    out.push_back(zhu_bound(n, Direction::lower));
    out.push_back(zhu_bound(n, Direction::upper));
  }
  for (int k : {1, 3, 5, 7, 9, 13, 17, 33}) out.push_back(taylor_sine(k));
  out.push_back(lv_si_lower());
  return out;
}

}  // namespace splinebound
