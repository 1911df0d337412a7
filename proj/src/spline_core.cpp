#include "splinebound/spline_core.hpp"

namespace splinebound {

namespace {

// sin(k pi/2) for k >= 0
long sin_quarter_turn(int k) {
  switch (k % 4) {
    case 1:
      return 1;
    case 3:
      return -1;
    default:
      return 0;
  }
}

EndpointData<PiRational> quarter_turn_data(int n, int phase) {
  if (n < 0) throw std::invalid_argument("spline order must be >= 0");
  EndpointData<PiRational> data{PiRational(), PiRational::pi_power(1, mpq_class(1, 2)), {}, {}};
  for (int k = 0; k <= n; ++k) {
    data.derivs_alpha.emplace_back(sin_quarter_turn(k + phase));
    data.derivs_beta.emplace_back(sin_quarter_turn(k + phase + 1));
  }
  return data;
}

}  // namespace

EndpointData<PiRational> sine_endpoint_data(int n) { return quarter_turn_data(n, 0); }

// cos(x) = sin(x + pi/2)
EndpointData<PiRational> cosine_endpoint_data(int n) { return quarter_turn_data(n, 1); }

SplineApproximant<PiRational> sine_spline(int n) {
  return two_point_spline(sine_endpoint_data(n), n, Target::sin);
}

SplineApproximant<PiRational> cosine_spline(int n) {
  return two_point_spline(cosine_endpoint_data(n), n, Target::cos);
}

}  // namespace splinebound
