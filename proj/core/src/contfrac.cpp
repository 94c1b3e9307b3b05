#include "dtuples/contfrac.hpp"

namespace dtuples {

namespace {

Int floor_rat(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return fl;
}

}  // namespace

std::vector<Convergent> cf_convergents(const Real& x, const Int& q_min) {
  auto [lo, hi] = x.enclosure();
  std::vector<Convergent> out;
  Int p2 = 0, p1 = 1, q2 = 1, q1 = 0;  // P_{-2},P_{-1},Q_{-2},Q_{-1}
  auto push = [&](const Int& a) {
    Int p = a * p1 + p2, q = a * q1 + q2;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
    out.push_back({p, q});
  };

  if (lo == hi) {
    // exact rational: Euclidean expansion terminates
    Rat y = lo;
    for (;;) {
      Int a = floor_rat(y);
      push(a);
      Rat frac = y - Rat(a);
      if (frac == 0) break;
      y = 1 / frac;
      if (q1 > q_min) return out;
    }
    if (q1 > q_min) return out;
    throw domain_error(
        "cf_convergents: rational expansion terminated before q_min");
  }

  // The set of reals whose expansion starts with given quotients is an
  // interval, so quotient-by-quotient agreement of the two endpoints
  // certifies the expansion of every value enclosed between them.
  for (;;) {
    Int al = floor_rat(lo), ah = floor_rat(hi);
    if (al != ah) break;
    push(al);
    if (q1 > q_min) return out;
    Rat fl = lo - Rat(al), fh = hi - Rat(al);
    if (fl == 0 || fh == 0) break;  // endpoint hit an integer: stop certifying
    lo = 1 / fh;  // reciprocals swap the endpoints
    hi = 1 / fl;
  }
  throw undecidable_error(
      "cf_convergents: insufficient precision to certify a convergent with "
      "q > q_min");
}

}  // namespace dtuples
