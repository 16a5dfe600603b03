#pragma once

#include <optional>
#include <string>

#include "slopenorm/manifold.hpp"

namespace slopenorm {

/// Static SVG with exactly one <polygon> (the unit ball of norm/norm(m)) and
/// one <ellipse> ({v : len(v)^2 = level}), drawn in homology coordinates.
/// The default level 9 norm(m)^2 / 4 is where the 2/3 lower bound places the
/// ellipse around the polygon. Throws std::invalid_argument without a cusp
/// or a norm.
std::string unit_ball_svg(const ManifoldData& manifold, std::optional<Rational> level = {});

}  // namespace slopenorm
