#include "splinebound/types.hpp"

#include <stdexcept>

namespace splinebound {

std::string to_string(Target target) {
  switch (target) {
    case Target::sin:
      return "sin";
    case Target::sinc:
      return "sinc";
    case Target::cos:
      return "cos";
    case Target::si:
      return "si";
    case Target::generic:
      return "generic";
  }
  return "?";
}

std::string to_string(Direction direction) {
  switch (direction) {
    case Direction::lower:
      return "lower";
    case Direction::upper:
      return "upper";
    case Direction::two_sided_component:
      return "two_sided_component";
    case Direction::approximation:
      return "approximation";
  }
  return "?";
}

Target parse_target(std::string_view name) {
  for (Target t : {Target::sin, Target::sinc, Target::cos, Target::si, Target::generic}) {
    if (to_string(t) == name) return t;
  }
  throw std::invalid_argument("unknown target '" + std::string(name) + "'");
}

Direction parse_direction(std::string_view name) {
  for (Direction d : {Direction::lower, Direction::upper, Direction::two_sided_component,
                      Direction::approximation}) {
    if (to_string(d) == name) return d;
  }
  throw std::invalid_argument("unknown direction '" + std::string(name) + "'");
}

}  // namespace splinebound
