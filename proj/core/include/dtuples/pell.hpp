#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtuples/family.hpp"

namespace dtuples {

/// Generalized Pell equation p z^2 - q x^2 = rhs attached to a D(sigma)-
/// triple; the unit s with s^2 = p*q + sigma drives the solution recurrence.
struct PellEquation {
  Int p, q, rhs;
  Int sigma;  // rhs = sigma * (p - q)
  Int s;      // s^2 = p*q + sigma
};

/// The elimination system of a D(sigma)-triple {a,b,c}:
///   a z^2 - c x^2 = sigma (a-c)
///   b z^2 - c y^2 = sigma (b-c)
///   a y^2 - b x^2 = sigma (a-b)
struct PellSystem {
  Triple tr;
  PellEquation zx;  // (a, c)
  PellEquation zy;  // (b, c)
  PellEquation yx;  // (a, b)
};

PellSystem pell_system(const Triple& tr);

struct FundSol {
  Int z0, x0;
  bool fundamental;  // backward step exits the window / loses minimality
};

/// All solutions (z0, x0) with |z0| <= z_bound, x0 >= 1 of
/// p z0^2 - q x0^2 = rhs, each flagged fundamental when the inverse
/// recurrence step leaves the solution set or increases |z|.
/// Enumerates residue classes of z mod q when the window is large.
std::vector<FundSol> fundamental_solutions(const PellEquation& eq,
                                           const Int& z_bound);

/// Enumeration window |z0| < p^(-1/4) q^(3/4) used for the z-equations.
Int z_window(const Int& p, const Int& q);

/// Arithmetic exclusion report for the four parity classes of v_m = w_n.
struct ClassifyReport {
  Int half_cr_minus_st;        // (cr - st)/2
  bool case_bd_excluded;       // |z0| = t incompatible with the window
  bool case_c_excluded;        // |z1| = s incompatible with its window
  bool interior_excluded;      // small-|z0| option killed by the size bound
  bool only_pm2;               // all of the above and (cr-st)/2 == 2
  std::string detail;
};

/// Evaluates which initial-term cases are arithmetically possible for a
/// D(4)-triple.  For the two-parameter families this must conclude
/// "even indices with x0 = y1 = 2 and z0 = z1 = +-2".
ClassifyReport classify_fundamentals(const Triple& tr);

/// Binary recurrence u_{k+2} = coeff * u_{k+1} - u_k.
struct RecurrenceSeq {
  Int u0, u1, coeff;
};

std::vector<Int> seq_generate(const RecurrenceSeq& seq, int count);
std::vector<Int> seq_mod_pattern(const RecurrenceSeq& seq, const Int& M,
                                 int count);

/// The z-sequence of eq with fundamental (z0, x0):
///   v0 = z0, v1 = (s z0 + q x0) / den, v_{k+2} = coeff v_{k+1} - v_k,
/// where (den, coeff) = (2, s) for sigma = 4 and (1, 2s) for sigma = 1.
/// Throws when the initial term is not integral.
RecurrenceSeq z_sequence(const PellEquation& eq, const Int& z0, const Int& x0);

struct Intersection {
  int m, n;  // raw indices
  Int z;
};

/// All v_m = w_n <= z_cap for two eventually increasing sequences,
/// exact integer merge.
std::vector<Intersection> intersect(const RecurrenceSeq& v,
                                    const RecurrenceSeq& w, const Int& z_cap);

/// d = (z^2 - sigma)/c when integral and >= 1.
std::optional<Int> solution_to_d(const Int& z, const Int& c, const Int& sigma);

/// Fundamental solutions of the (a, b)-equation inside the window
/// a y2^4 < b^3, 1 <= x2 < sqrt(b), with the combination b*x2 - r*|y2|
/// whose value sigma signals the odd/even index collision.
struct MixedParityCheck {
  struct Entry {
    Int y2, x2, combo;  // combo = b*x2 - r*|y2|
  };
  std::vector<Entry> window;
  bool obstruction_fails;  // no entry has combo == sigma
};

MixedParityCheck mixed_parity_check(const Triple& tr);

/// Every extension d <= d_max recovered through the Pell system:
/// intersections of all fundamental z-branches of the two z-equations.
std::vector<Int> extensions_via_pell(const Triple& tr, const Int& d_max);

}  // namespace dtuples
