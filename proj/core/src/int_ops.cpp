#include "dtuples/int_ops.hpp"

#include <algorithm>

namespace dtuples {

IsqrtResult isqrt(const Int& n) {
  if (n < 0) throw domain_error("isqrt: negative argument");
  IsqrtResult out;
  Int rem;
  mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  out.exact = (rem == 0);
  return out;
}

Int ceil_sqrt(const Int& n) {
  auto r = isqrt(n);
  return r.exact ? r.root : r.root + 1;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

unsigned long v2(const Int& n) {
  if (n == 0) throw domain_error("v2: zero argument");
  return mpz_scan1(n.get_mpz_t(), 0);
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n_in) {
  Int n = abs(n_in);
  if (n == 0) throw domain_error("factorize: zero argument");
  std::vector<std::pair<Int, unsigned>> out;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Int p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  if (n <= 0) throw domain_error("divisors: argument must be positive");
  std::vector<Int> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_power_shape(const Int& n) {
  if (n <= 0) return false;
  if (n == 4) return true;
  const unsigned long tw = (n % 2 == 0) ? v2(n) : 0;
  if (tw > 1) return false;
  Int odd = n >> tw;
  if (odd == 1) return tw <= 1;  // 1 or 2
  auto fac = factorize(odd);
  return fac.size() == 1;
}

namespace {

// x^k mod m
Int pow_mod(const Int& x, const Int& k, const Int& m) {
  Int out;
  mpz_powm(out.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
  return out;
}

// Tonelli-Shanks, p an odd prime, a a quadratic residue candidate.
// Returns roots {r, p-r} or empty.
std::vector<Int> sqrt_mod_odd_prime(const Int& a, const Int& p) {
  Int am = a % p;
  if (am < 0) am += p;
  if (am == 0) return {0};
  if (pow_mod(am, (p - 1) / 2, p) != 1) return {};
  Int r;
  if (p % 4 == 3) {
    r = pow_mod(am, (p + 1) / 4, p);
  } else {
    // find a non-residue
    Int z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    Int q = p - 1;
    unsigned long s = v2(q);
    q >>= s;
    Int m = s;
    Int c = pow_mod(z, q, p);
    Int t = pow_mod(am, q, p);
    r = pow_mod(am, (q + 1) / 2, p);
    while (t != 1) {
      Int t2 = t;
      Int i = 0;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
        if (i >= m) return {};  // not a residue (defensive; sieved above)
      }
      Int b = c;
      for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      r = r * b % p;
    }
  }
  Int r2 = p - r;
  if (r == r2) return {r};
  return {std::min(r, r2), std::max(r, r2)};
}

// Lift the solution set of x^2 = a (mod p^j) from j to j+1 by testing the
// p candidates above each solution.  Slow only when p is large AND e >= 2,
// which cannot happen for moduli within the factorization range.
std::vector<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e) {
  std::vector<Int> sols;
  Int pj = p;
  {
    Int am = a % p;
    if (am < 0) am += p;
    if (p == 2) {
      for (Int x = 0; x < 2; ++x)
        if ((x * x - am) % 2 == 0) sols.push_back(x);
    } else {
      sols = sqrt_mod_odd_prime(am, p);
    }
  }
  for (unsigned j = 1; j < e; ++j) {
    Int pj1 = pj * p;
    std::vector<Int> next;
    if (p == 2 || sols.size() > 2 || (!sols.empty() && sols[0] == 0) ||
        mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
      // brute lift (p=2 or ramified cases)
      for (const Int& x : sols)
        for (Int i = 0; i < p; ++i) {
          Int cand = x + i * pj;
          if ((cand * cand - a) % pj1 == 0) next.push_back(cand);
        }
    } else {
      // Hensel: x' = x - (x^2-a) * inv(2x) mod pj1
      for (const Int& x : sols) {
        Int inv;
        Int twox = 2 * x;
        if (mpz_invert(inv.get_mpz_t(), twox.get_mpz_t(), pj1.get_mpz_t())) {
          Int cand = (x - (x * x - a) * inv) % pj1;
          if (cand < 0) cand += pj1;
          if ((cand * cand - a) % pj1 == 0) next.push_back(cand);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sols = std::move(next);
    pj = pj1;
    if (sols.empty()) return {};
  }
  return sols;
}

}  // namespace

std::vector<Int> sqrt_mod(const Int& a, const Int& m) {
  if (m < 1) throw domain_error("sqrt_mod: modulus must be >= 1");
  if (m == 1) return {0};
  std::vector<Int> sols{0};
  Int mod_so_far = 1;
  for (const auto& [p, e] : factorize(m)) {
    Int pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    auto part = sqrt_mod_prime_power(a % pe, p, e);
    if (part.empty()) return {};
    // CRT combine
    std::vector<Int> next;
    next.reserve(sols.size() * part.size());
    Int newmod = mod_so_far * pe;
    Int minv;
    mpz_invert(minv.get_mpz_t(), mod_so_far.get_mpz_t(), pe.get_mpz_t());
    for (const Int& x : sols)
      for (const Int& y : part) {
        Int k = ((y - x) * minv) % pe;
        if (k < 0) k += pe;
        next.push_back(x + mod_so_far * k);
      }
    sols = std::move(next);
    mod_so_far = newmod;
  }
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  return sols;
}

}  // namespace dtuples
