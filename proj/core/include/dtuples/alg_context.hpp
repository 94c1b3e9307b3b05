#pragma once

#include "dtuples/family.hpp"
#include "dtuples/quintuple_sieve.hpp"
#include "dtuples/real.hpp"

namespace dtuples {

/// Certified evaluations of the algebraic numbers attached to a triple:
///   alpha = (s + sqrt(ac))/u,  beta = (r + sqrt(ab))/u,
///   gamma = (t + sqrt(bc))/u,            u = 2 for sigma=4, 1 for sigma=1,
///   chi   = (sqrt(bc)+sqrt(ac)) / (sqrt(bc) + branch*sqrt(ab)),
///   mu    = sqrt(b)(sqrt(c)+branch*sqrt(a)) / (sqrt(a)(sqrt(c)+branch*sqrt(b)))
/// with branch in {+1, -1}.  gap_multiplier is the certified coefficient G
/// in the index bound m > G * nu * log(beta).
class AlgContext {
 public:
  Triple tr;
  int branch = 1;
  long digits = 60;
  Real sqrt_a, sqrt_b, sqrt_c;
  Real alpha, beta, gamma, chi, mu;
  Int N;               // (A^2+A)K/2 + eps*A for family contexts, else 0
  Int gap_multiplier;  // A-1 (eps=-2), A (eps=+2), Delta^2-2 (Delta family)

  static AlgContext from_family(const FamilyTriple& f, int branch,
                                long digits);
  static AlgContext from_delta(const DeltaTriple& d, int branch, long digits);
  /// Generic D(sigma)-triple; gap multiplier supplied by the caller.
  static AlgContext from_triple(const Triple& t, const Int& gap_multiplier,
                                int branch, long digits);
};

struct Heights {
  Real h_chi_upper;       // (1/4) log(b c^2 (c-a))
  Real h_alpha_over_beta; // (1/2) log(alpha)
};

Heights heights(const AlgContext& ctx);

/// chi * chi''' = (bc - ac)/(bc - ab), the conjugate product; lies in (0,1).
Real chi_conjugate_product(const AlgContext& ctx);

/// Certified check of the simultaneous-approximation inequality
///   max{|th1 - (A+1)x/z|, |th2 - (A+1)y/(Az)|} < 2(A+1)(A+1+2/K) z^-2
/// for a solution (x, y, z) of the family's Pell system.
bool sim_approx_check(const FamilyTriple& f, const Int& x, const Int& y,
                      const Int& z, long digits);

}  // namespace dtuples
