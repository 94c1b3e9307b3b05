#pragma once

#include <optional>

#include "dtuples/int_ops.hpp"

namespace dtuples {

/// A D(sigma)-triple a < b < c together with the square roots
/// r^2 = ab + sigma, s^2 = ac + sigma, t^2 = bc + sigma.
struct Triple {
  Int a, b, c;
  Int r, s, t;
  Int sigma;

  /// Builds and validates from the elements alone; throws domain_error
  /// when a pairwise product + sigma is not a perfect square or the
  /// ordering 0 < a < b < c fails.
  static Triple from_elements(const Int& a, const Int& b, const Int& c,
                              const Int& sigma);

  /// c == a + b + 2r, the regular-triple relation.
  bool regular() const { return c == a + b + 2 * r; }
};

/// The two-parameter triple {K, A^2 K + 2eA, (A+1)^2 K + 2e(A+1)},
/// e in {-2,-1,1,2}, with its closed-form square roots.
struct FamilyTriple {
  Int A, K;
  int eps;
  Triple tr;
};

/// Instantiates the family; throws domain_error("degenerate parameters")
/// unless 0 < a < b < c.
FamilyTriple family_triple(const Int& A, const Int& K, int eps);

/// d+ = a+b+c + (2/sigma)(abc + rst).  Evaluated over exact rationals;
/// integrality is asserted.
Int d_plus(const Triple& t);

/// Structural companion a+b+c + (2/sigma)(abc - rst); zero exactly on
/// regular triples.
Int d_minus(const Triple& t);

/// The closed-form quartic in (A, K) for the family's regular extension:
/// e^-2 (2A^2+2A)^2 K^3 + e^-1 (16A^3+24A^2+8A) K^2
///   + (20A^2+20A+4) K + e(8A+4).
Int d_plus_closed(const Int& A, const Int& K, int eps);

/// For K | 4: the eps=-2 family at A equals the eps=+2 family at B = A-4/K.
/// Throws unless K divides 4 and A > 4/K.
Int dual_map(const Int& A, const Int& K);

/// Writes a regular D(eps^2)-triple in family coordinates when
/// r = +-eps (mod a): A = (r -+ eps)/a, K = a.  nullopt when neither
/// congruence holds.
std::optional<FamilyTriple> to_family_form(const Int& a, const Int& b,
                                           const Int& c, int eps);

}  // namespace dtuples
