#include "slopenorm/manifold.hpp"

namespace slopenorm {

std::vector<std::string> validation_errors(const ManifoldData& manifold) {
  std::vector<std::string> problems;
  if (manifold.name.empty()) problems.push_back("manifold name is empty");
  if (manifold.norm) {
    for (const NormTerm& term : manifold.norm->terms()) {
      if (!manifold.boundary_slopes.contains(term.slope)) {
        problems.push_back("norm slope " + to_string(term.slope) + " is not a boundary slope");
      }
    }
  }
  for (const SurfaceData& s : manifold.surfaces) {
    if (!manifold.boundary_slopes.contains(s.slope)) {
      problems.push_back("surface slope " + to_string(s.slope) + " is not a boundary slope");
    }
    if (s.boundary_components < 1) {
      problems.push_back("surface with slope " + to_string(s.slope) +
                         " needs at least one boundary component");
    }
  }
  if (manifold.certified_meridian_norm && *manifold.certified_meridian_norm <= 0) {
    problems.push_back("certified meridian norm must be positive");
  }
  return problems;
}

}  // namespace slopenorm
