#pragma once

#include <optional>
#include <vector>

#include "dtuples/int_ops.hpp"

namespace dtuples {

struct PairWitness {
  Int u, v, w;  // u*v + n == w^2
};

/// A verified D(n)-tuple: every pairwise product plus the shift n is a
/// perfect square; `witnesses` holds the square roots in lexicographic
/// pair order.
struct DTuple {
  std::vector<Int> elems;  // strictly increasing, positive
  Int n;
  std::vector<PairWitness> witnesses;
};

struct DTupleCheck {
  bool valid = false;
  std::optional<DTuple> tuple;
  std::optional<std::pair<Int, Int>> first_failure;  // lexicographically first
};

/// Validates {elems} as a D(n)-tuple.  Elements must be positive and
/// distinct (domain_error otherwise); order of the input is irrelevant.
DTupleCheck verify_dtuple(std::vector<Int> elems, const Int& n);

}  // namespace dtuples
