#pragma once

#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dtuples/int_ops.hpp"

namespace dtuples {

/// Raised when an interval comparison (or floor, sign, ...) cannot be
/// certified at the current working precision.  Drivers catch this and
/// recompute at doubled precision, see with_precision().
struct undecidable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by with_precision() once the precision ceiling is exceeded.
struct precision_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Certified real scalar: an interval [lo, hi] of MPFR numbers that is
/// guaranteed to contain the exact value.  Every operation rounds the lower
/// endpoint down and the upper endpoint up, so enclosures are rigorous.
/// A comparison is reported only when the two intervals are disjoint;
/// otherwise undecidable_error is thrown.  Immutable after construction.
class Real {
 public:
  Real();
  explicit Real(long digits);
  Real(const Real&);
  Real(Real&&) noexcept;
  Real& operator=(const Real&);
  Real& operator=(Real&&) noexcept;
  ~Real();

  static Real from_int(const Int& n, long digits);
  static Real from_ratio(const Int& num, const Int& den, long digits);
  static Real from_rat(const Rat& q, long digits);
  // Decimal string, enclosed by one ulp on each side unless exact.
  static Real from_decimal(const std::string& s, long digits);

  long digits() const { return digits_; }

  Real operator-() const;
  Real abs() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  Real add_int(const Int& n) const;
  Real mul_int(const Int& n) const;
  Real div_int(const Int& n) const;

  Real sqrt() const;  // argument must be certified >= 0
  Real log() const;   // argument must be certified > 0
  Real exp() const;
  Real pow_int(long e) const;  // base must be certified > 0 for e < 0

  /// Distance to the nearest integer, in [0, 1/2].  Requires err() < 1/4.
  Real nearest_int_dist() const;

  /// -1, 0 (exact zero only) or +1; undecidable when the interval
  /// straddles zero with positive width.
  std::optional<int> sign() const;
  static std::optional<int> compare(const Real& a, const Real& b);

  // Certified predicates; throw undecidable_error when not decidable.
  bool lt(const Real& b) const;
  bool gt(const Real& b) const;
  bool positive() const;

  bool contains_zero() const;
  bool is_exact() const;

  /// Floor of the value; throws when the enclosure spans an integer.
  Int floor_certified() const;

  /// Exact rational endpoints lo <= x <= hi.
  std::pair<Rat, Rat> enclosure() const;

  /// Upper bound for the absolute error (half-width is <= this).
  /// Returned as log10, -inf for exact values.
  double err_log10() const;

  double approx() const;              // midpoint as double, for display
  std::string str(int digits) const;  // midpoint, decimal

 private:
  void init(long digits);
  mpfr_t lo_, hi_;
  long digits_ = 0;
};

/// Natural log of a positive integer / rational at the requested precision.
Real log_int(const Int& n, long digits);
Real log_ratio(const Int& num, const Int& den, long digits);

/// Working precision rule used by the reduction engine:
/// max(180, 10 * ceil(A/100)) decimal digits.
long reduction_digits(const Int& A);

/// Run fn(digits), doubling the precision on undecidable_error until the
/// ceiling (default 4x the start) is exceeded, then rethrow as
/// precision_exhausted.
template <typename F>
auto with_precision(long start_digits, F&& fn, long ceiling_digits = 0) {
  if (ceiling_digits <= 0) ceiling_digits = 4 * start_digits;
  long d = start_digits;
  for (;;) {
    try {
      return fn(d);
    } catch (const undecidable_error& e) {
      if (2 * d > ceiling_digits)
        throw precision_exhausted(std::string("precision ceiling reached: ") +
                                  e.what());
      d *= 2;
    }
  }
}

}  // namespace dtuples
