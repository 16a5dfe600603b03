#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopenorm/cs_norm.hpp"
#include "slopenorm/cusp_lattice.hpp"
#include "slopenorm/surface.hpp"

namespace slopenorm {

/// Everything known about one knot manifold: the unit of file I/O and of
/// verification.
struct ManifoldData {
  std::string name;
  std::optional<CuspLatticeQ> cusp;
  std::optional<CSNormData> norm;
  BoundarySlopeSet boundary_slopes;
  std::vector<SurfaceData> surfaces;
  /// Meridian norm known from the literature when the full term list is not.
  std::optional<std::int64_t> certified_meridian_norm;

  friend bool operator==(const ManifoldData&, const ManifoldData&) = default;
};

/// Cross-field invariants: norm slopes and surface slopes are boundary
/// slopes, surfaces have b >= 1. Empty when valid.
std::vector<std::string> validation_errors(const ManifoldData& manifold);

}  // namespace slopenorm
