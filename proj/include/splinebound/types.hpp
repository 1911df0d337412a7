#pragma once

#include <string>
#include <string_view>

namespace splinebound {

/// Function a bound or approximant targets.
enum class Target { sin, sinc, cos, si, generic };

/// Side on which a bound lies relative to its target.
enum class Direction { lower, upper, two_sided_component, approximation };

std::string to_string(Target target);
std::string to_string(Direction direction);
/// Throws std::invalid_argument on an unknown name.
Target parse_target(std::string_view name);
Direction parse_direction(std::string_view name);

}  // namespace splinebound
