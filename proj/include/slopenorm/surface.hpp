#pragma once

#include <cstdint>

#include "slopenorm/slope.hpp"

namespace slopenorm {

/// An essential surface, recorded by the data the inequalities consume.
/// Essentiality, strictness and ideal-point association are input flags;
/// nothing here certifies them.
struct SurfaceData {
  Slope slope;
  std::int64_t euler = -1;               // Euler characteristic
  std::int64_t boundary_components = 1;  // b >= 1
  bool strict = false;
  bool ideal_point = false;

  friend bool operator==(const SurfaceData&, const SurfaceData&) = default;
};

}  // namespace slopenorm
