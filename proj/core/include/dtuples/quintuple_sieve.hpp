#pragma once

#include <string>
#include <vector>

#include "dtuples/family.hpp"

namespace dtuples {

enum class SieveStatus {
  EliminatedGcd,
  EliminatedParity,
  EliminatedCorollary,
  EliminatedBound,
  Survivor,
};

const char* to_string(SieveStatus s);

struct SieveVerdict {
  Int a;
  Int delta;  // Delta for the regular scan, small delta for the b<4a scan
  Int b, c;
  SieveStatus status;
  std::string reason;
};

struct SieveOptions {
  Int a_min = 16;
  Int a_max = 10000;
  // Prop-7.2-style cutoff a >= 20; relax to 16 for exploration.
  bool strict_a_cutoff = true;
};

/// Candidate smallest triples of a D(1)-quintuple whose first three elements
/// are regular with r = a^2 - Delta: a runs over the divisors of Delta^2-1
/// in range, b = a^3 - 2a*Delta + (Delta^2-1)/a, c = a + b + 2r.  Filters
/// are applied cheapest-first and a verdict records the first failure only.
std::vector<SieveVerdict> quintuple_scan_regular(const Int& delta_max,
                                                 const SieveOptions& opt = {});

/// Same cascade for the b < 4a shape, r = 2a - delta with delta odd > 1,
/// b = 4a - 4*delta + (delta^2-1)/a, plus the exclusions a = delta^2-1 and
/// b <= 130000.
std::vector<SieveVerdict> quintuple_scan_b4a(const Int& delta_max,
                                             const SieveOptions& opt = {});

/// Upper bounds for the second element: a^3 - 2a*ceil(sqrt(3a+1)) + 3 for
/// the regular shape, 4a - 4*ceil(sqrt(3a+1)) + 3 for the b < 4a shape.
Int b_bound_regular(const Int& a);
Int b_bound_b4a(const Int& a);

/// The extremal one-parameter family a = Delta^2-1 (Delta >= 6):
/// b, c, r, s, t and the regular extension are fixed polynomials in Delta.
struct DeltaTriple {
  Int Delta;
  Triple tr;  // sigma = 1
  Int d_plus_value;
};

DeltaTriple delta_family_triple(const Int& Delta);

}  // namespace dtuples
