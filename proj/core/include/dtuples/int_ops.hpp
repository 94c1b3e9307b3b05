#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dtuples {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IsqrtResult {
  Int root;
  bool exact;
};

/// Integer square root: root^2 <= n < (root+1)^2.  Throws on n < 0.
IsqrtResult isqrt(const Int& n);

/// Smallest integer >= sqrt(n), n >= 0.
Int ceil_sqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// 2-adic valuation; v2(0) is undefined and throws.
unsigned long v2(const Int& n);

/// Trial-division factorization, pairs (prime, exponent) in increasing order.
/// Intended for the sieve/solver ranges (|n| up to ~10^13).
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

/// All divisors of n > 0 in increasing order.
std::vector<Int> divisors(const Int& n);

/// True when n is 4, an odd prime power p^e (e >= 0), or twice one.
bool is_prime_power_shape(const Int& n);

/// All square roots of a modulo m (0 <= root < m), sorted.  m >= 1.
/// Handles arbitrary composite m via factorization, Tonelli-Shanks and
/// Hensel lifting; returns an empty vector when a is not a square mod m.
std::vector<Int> sqrt_mod(const Int& a, const Int& m);

}  // namespace dtuples
