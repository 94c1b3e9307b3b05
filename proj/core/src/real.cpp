#include "dtuples/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dtuples {

namespace {

mpfr_prec_t bits_for(long digits) {
  if (digits < 10) digits = 10;
  // 64 guard bits keep conversions of all integers met in practice exact
  // and absorb accumulated outward rounding.
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 64);
}

}  // namespace

void Real::init(long digits) {
  digits_ = digits;
  const mpfr_prec_t p = bits_for(digits);
  mpfr_init2(lo_, p);
  mpfr_init2(hi_, p);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Real::Real() { init(30); }
Real::Real(long digits) { init(digits); }

Real::Real(const Real& o) {
  init(o.digits_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Real::Real(Real&& o) noexcept {
  digits_ = o.digits_;
  lo_[0] = o.lo_[0];
  hi_[0] = o.hi_[0];
  // leave the source valid for its destructor
  mpfr_init2(o.lo_, MPFR_PREC_MIN);
  mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, bits_for(o.digits_));
    mpfr_set_prec(hi_, bits_for(o.digits_));
    digits_ = o.digits_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(digits_, o.digits_);
  }
  return *this;
}

Real::~Real() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Real Real::from_int(const Int& n, long digits) {
  Real r(digits);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Real Real::from_ratio(const Int& num, const Int& den, long digits) {
  if (den == 0) throw domain_error("from_ratio: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return from_rat(q, digits);
}

Real Real::from_rat(const Rat& q, long digits) {
  Real r(digits);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Real Real::from_decimal(const std::string& s, long digits) {
  Real r(digits);
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
      mpfr_nan_p(r.lo_))
    throw domain_error("from_decimal: cannot parse '" + s + "'");
  int rc = mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
  if (rc != 0 && mpfr_nan_p(r.hi_))
    throw domain_error("from_decimal: cannot parse '" + s + "'");
  return r;
}

Real Real::operator-() const {
  Real r(digits_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Real Real::abs() const {
  Real r(digits_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(std::min(a.digits_, b.digits_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(std::min(a.digits_, b.digits_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(std::min(a.digits_, b.digits_));
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(r.lo_));
  // lower endpoint: min of the four products rounded down
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_swap(t, r.lo_);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_swap(t, r.lo_);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_swap(t, r.lo_);
  // upper endpoint: max of the four rounded up
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_swap(t, r.hi_);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_swap(t, r.hi_);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_swap(t, r.hi_);
  mpfr_clear(t);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  if (b.contains_zero()) {
    if (b.is_exact()) throw domain_error("division by exact zero");
    throw undecidable_error("division by interval containing zero");
  }
  Real r(std::min(a.digits_, b.digits_));
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(r.lo_));
  mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_swap(t, r.lo_);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_swap(t, r.lo_);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_swap(t, r.lo_);
  mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_swap(t, r.hi_);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_swap(t, r.hi_);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_swap(t, r.hi_);
  mpfr_clear(t);
  return r;
}

Real Real::add_int(const Int& n) const {
  Real r(digits_);
  mpfr_add_z(r.lo_, lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_add_z(r.hi_, hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Real Real::mul_int(const Int& n) const { return *this * from_int(n, digits_); }

Real Real::div_int(const Int& n) const {
  if (n == 0) throw domain_error("div_int: zero divisor");
  return *this / from_int(n, digits_);
}

Real Real::sqrt() const {
  if (mpfr_sgn(lo_) < 0) {
    if (mpfr_sgn(hi_) < 0) throw domain_error("sqrt of negative value");
    throw undecidable_error("sqrt: sign not certified");
  }
  Real r(digits_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real Real::log() const {
  if (mpfr_sgn(lo_) <= 0) {
    if (mpfr_sgn(hi_) <= 0) throw domain_error("log of non-positive value");
    throw undecidable_error("log: positivity not certified");
  }
  Real r(digits_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real Real::exp() const {
  Real r(digits_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real Real::pow_int(long e) const {
  if (e == 0) return from_int(1, digits_);
  Real r(digits_);
  if (e > 0) {
    if (mpfr_sgn(lo_) >= 0) {
      mpfr_pow_si(r.lo_, lo_, e, MPFR_RNDD);
      mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
      return r;
    }
    // fall back to repeated squaring through interval multiplication
    Real acc = from_int(1, digits_);
    Real base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }
  if (mpfr_sgn(lo_) <= 0) {
    if (mpfr_sgn(hi_) <= 0)
      throw domain_error("pow_int: negative exponent of non-positive base");
    throw undecidable_error("pow_int: base sign not certified");
  }
  mpfr_pow_si(r.lo_, hi_, e, MPFR_RNDD);
  mpfr_pow_si(r.hi_, lo_, e, MPFR_RNDU);
  return r;
}

Real Real::nearest_int_dist() const {
  // require width < 1/2 so the shifted value sits inside (-3/4, 3/4)
  mpfr_t w;
  mpfr_init2(w, mpfr_get_prec(lo_));
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  bool wide = mpfr_cmp_d(w, 0.5) >= 0;
  mpfr_clear(w);
  if (wide) throw undecidable_error("nearest_int_dist: error exceeds 1/4");

  Int n;
  {
    mpfr_t mid;
    mpfr_init2(mid, mpfr_get_prec(lo_));
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_get_z(n.get_mpz_t(), mid, MPFR_RNDN);
    mpfr_clear(mid);
  }
  Real z = add_int(-n).abs();  // |x - n| in [0, 3/4)
  // g(v) = min(v, 1-v); image of [v_lo, v_hi]
  Real one = from_int(1, digits_);
  Real w1 = one - z;  // interval of 1-v
  Real r(digits_);
  // lower endpoint: min(v_lo, (1-v)_lo), clamped at 0
  mpfr_set(r.lo_, z.lo_, MPFR_RNDD);
  if (mpfr_cmp(w1.lo_, r.lo_) < 0) mpfr_set(r.lo_, w1.lo_, MPFR_RNDD);
  if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
  // upper endpoint: 1/2 if v-interval spans 1/2, else min(v_hi, (1-v)_hi)
  if (mpfr_cmp_d(z.lo_, 0.5) <= 0 && mpfr_cmp_d(z.hi_, 0.5) >= 0) {
    mpfr_set_d(r.hi_, 0.5, MPFR_RNDU);
  } else {
    mpfr_set(r.hi_, z.hi_, MPFR_RNDU);
    if (mpfr_cmp(w1.hi_, r.hi_) < 0) mpfr_set(r.hi_, w1.hi_, MPFR_RNDU);
  }
  return r;
}

std::optional<int> Real::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
  return std::nullopt;
}

std::optional<int> Real::compare(const Real& a, const Real& b) {
  if (mpfr_cmp(a.hi_, b.lo_) < 0) return -1;
  if (mpfr_cmp(a.lo_, b.hi_) > 0) return 1;
  if (a.is_exact() && b.is_exact() && mpfr_cmp(a.lo_, b.lo_) == 0) return 0;
  return std::nullopt;
}

bool Real::lt(const Real& b) const {
  auto c = compare(*this, b);
  if (!c) throw undecidable_error("comparison not decidable at this precision");
  return *c < 0;
}

bool Real::gt(const Real& b) const {
  auto c = compare(*this, b);
  if (!c) throw undecidable_error("comparison not decidable at this precision");
  return *c > 0;
}

bool Real::positive() const {
  auto s = sign();
  if (!s) throw undecidable_error("sign not decidable at this precision");
  return *s > 0;
}

bool Real::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Real::is_exact() const { return mpfr_cmp(lo_, hi_) == 0; }

Int Real::floor_certified() const {
  Int fl, fh;
  mpfr_get_z(fl.get_mpz_t(), lo_, MPFR_RNDD);
  mpfr_get_z(fh.get_mpz_t(), hi_, MPFR_RNDD);
  if (fl != fh) throw undecidable_error("floor: enclosure spans an integer");
  return fl;
}

std::pair<Rat, Rat> Real::enclosure() const {
  Rat l, h;
  mpfr_get_q(l.get_mpq_t(), lo_);
  mpfr_get_q(h.get_mpq_t(), hi_);
  return {l, h};
}

double Real::err_log10() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  if (mpfr_zero_p(w)) {
    mpfr_clear(w);
    return -std::numeric_limits<double>::infinity();
  }
  mpfr_log10(w, w, MPFR_RNDU);
  double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

double Real::approx() const {
  mpfr_t mid;
  mpfr_init2(mid, 64);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  double out = mpfr_get_d(mid, MPFR_RNDN);
  mpfr_clear(mid);
  return out;
}

std::string Real::str(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, mpfr_get_prec(lo_));
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, mid);
  std::string out(raw);
  mpfr_free_str(raw);
  mpfr_clear(mid);
  return out;
}

Real log_int(const Int& n, long digits) {
  if (n <= 0) throw domain_error("log_int: argument must be positive");
  return Real::from_int(n, digits).log();
}

Real log_ratio(const Int& num, const Int& den, long digits) {
  return Real::from_ratio(num, den, digits).log();
}

long reduction_digits(const Int& A) {
  Int q = (A + 99) / 100;
  long v = 10 * q.get_si();
  return v > 180 ? v : 180;
}

}  // namespace dtuples
