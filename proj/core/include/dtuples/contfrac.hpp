#pragma once

#include <vector>

#include "dtuples/real.hpp"

namespace dtuples {

struct Convergent {
  Int p, q;
};

/// Convergents of the continued fraction of x, certified against the exact
/// rational enclosure of x: a partial quotient is emitted only when both
/// interval endpoints agree on it.  Returns the convergents up to and
/// including the first with q > q_min.
///
/// Throws undecidable_error when the enclosure is too wide to reach q_min,
/// and domain_error when x is an exact rational whose expansion terminates
/// below q_min.
std::vector<Convergent> cf_convergents(const Real& x, const Int& q_min);

}  // namespace dtuples
