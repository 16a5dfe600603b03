#pragma once

#include <cstdint>

#include "slopenorm/manifold.hpp"
#include "slopenorm/verify.hpp"

namespace slopenorm {

/// Figure-eight knot exterior: maximal cusp with Gram (1, 0, 12), norm
/// 2 Delta(., 4/1) + 2 Delta(., -4/1), boundary slopes {4/1, -4/1} and the two
/// checkerboard surfaces (once-punctured Klein bottles) carrying them.
ManifoldData fig8_dataset();

/// (-2, 3, n) pretzel knot exterior, n odd and >= 7: surfaces with slopes 16
/// and 2n + 6, and the certified meridian norm 3n - 9 when 3 does not divide n.
/// No cusp and no full norm. Throws std::invalid_argument for invalid n.
ManifoldData pretzel_dataset(std::int64_t n);

/// Checkerboard pair of a reduced alternating diagram with `crossings`
/// crossings and Euler characteristics chi1 + chi2 = 2 - crossings, both
/// negative: checks Delta = 2C >= 2C - 4 >= 2(-chi_i)/b_i. Throws
/// std::invalid_argument when the parameters are inconsistent.
VerifyReport twobridge_pair(std::int64_t crossings, std::int64_t chi1, std::int64_t chi2);

/// Abstract manifold record for the checkerboard pair. Only Delta = 2C between
/// the two slopes is meaningful; they are placed at +-C.
ManifoldData twobridge_dataset(std::int64_t crossings, std::int64_t chi1, std::int64_t chi2);

}  // namespace slopenorm
