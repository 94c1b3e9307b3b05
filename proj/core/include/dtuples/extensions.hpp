#pragma once

#include <vector>

#include "dtuples/family.hpp"

namespace dtuples {

/// Exhaustive search for every d in [1, d_max] \ {a,b,c} such that
/// a*d+sigma, b*d+sigma and c*d+sigma are all perfect squares.
///
/// Enumerates z with z^2 = c*d + sigma over the square-root classes of
/// sigma mod c, so the cost is ~ sqrt(8ab/sigma) residue steps per class
/// rather than d_max iterations; quadratic-residue filters keep the
/// per-step work to a few arithmetic ops.  Falls back to arbitrary
/// precision outside the 128-bit range.
std::vector<Int> brute_force_extensions(const Triple& t, const Int& d_max);

}  // namespace dtuples
