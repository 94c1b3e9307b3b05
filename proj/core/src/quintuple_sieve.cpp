#include "dtuples/quintuple_sieve.hpp"

namespace dtuples {

const char* to_string(SieveStatus s) {
  switch (s) {
    case SieveStatus::EliminatedGcd: return "eliminated-gcd";
    case SieveStatus::EliminatedParity: return "eliminated-parity";
    case SieveStatus::EliminatedCorollary: return "eliminated-corollary";
    case SieveStatus::EliminatedBound: return "eliminated-bound";
    case SieveStatus::Survivor: return "survivor";
  }
  return "?";
}

namespace {

// Shared filter cascade once (a, delta, b, c) are on the table.  Returns a
// survivor verdict if everything passes.  `two_adic_ref` is the quantity
// whose 2-adic valuation must match a's when a is even (delta^2 - 1).
SieveVerdict run_filters(const Int& a, const Int& delta, const Int& b,
                         const Int& c, const Int& two_adic_ref,
                         bool strict_a_cutoff) {
  SieveVerdict v{a, delta, b, c, SieveStatus::Survivor, ""};
  if (b >= a * a * a) {
    v.status = SieveStatus::EliminatedBound;
    v.reason = "b >= a^3";
    return v;
  }
  Int g = gcd(b, c);
  if (g != 1) {
    v.status = SieveStatus::EliminatedGcd;
    v.reason = "gcd(b,c) = " + g.get_str();
    return v;
  }
  if (a % 2 == 0 && b % 2 == 0) {
    v.status = SieveStatus::EliminatedParity;
    v.reason = "a and b both even";
    return v;
  }
  if (a % 2 == 0 && v2(a) != v2(two_adic_ref)) {
    v.status = SieveStatus::EliminatedParity;
    v.reason = "2-adic valuation of a differs from delta^2-1";
    return v;
  }
  if (strict_a_cutoff && a < 20) {
    v.status = SieveStatus::EliminatedBound;
    v.reason = "a < 20";
    return v;
  }
  if (is_prime_power_shape(a)) {
    v.status = SieveStatus::EliminatedCorollary;
    v.reason = "a of the form 4, p^e or 2p^e forces the regular extension";
    return v;
  }
  return v;
}

}  // namespace

std::vector<SieveVerdict> quintuple_scan_regular(const Int& delta_max,
                                                 const SieveOptions& opt) {
  if (opt.a_min < 16 || opt.a_max > 10000 || delta_max > 200)
    throw domain_error("quintuple_scan_regular: range out of contract");
  std::vector<SieveVerdict> out;
  for (Int Delta = 5; Delta <= delta_max; ++Delta) {
    Int disc = Delta * Delta - 1;
    for (const Int& a : divisors(disc)) {
      if (a < opt.a_min || a > opt.a_max) continue;
      Int r = a * a - Delta;
      Int b = a * a * a - 2 * a * Delta + disc / a;
      Int c = a + b + 2 * r;
      if (b <= a) {  // not an ordered triple; cannot occur for a | disc > Delta
        out.push_back({a, Delta, b, c, SieveStatus::EliminatedBound,
                       "degenerate ordering"});
        continue;
      }
      out.push_back(run_filters(a, Delta, b, c, disc, opt.strict_a_cutoff));
    }
  }
  return out;
}

std::vector<SieveVerdict> quintuple_scan_b4a(const Int& delta_max,
                                             const SieveOptions& opt) {
  if (opt.a_min < 16 || opt.a_max > 10000 || delta_max > 200)
    throw domain_error("quintuple_scan_b4a: range out of contract");
  std::vector<SieveVerdict> out;
  for (Int delta = 1; delta <= delta_max; ++delta) {
    if (delta == 1) {
      out.push_back({0, delta, 0, 0, SieveStatus::EliminatedCorollary,
                     "delta = 1: triple lies in a uniquely extendable family"});
      continue;
    }
    if (delta % 2 == 0) {
      out.push_back({0, delta, 0, 0, SieveStatus::EliminatedParity,
                     "delta must be odd"});
      continue;
    }
    Int disc = delta * delta - 1;
    for (const Int& a : divisors(disc)) {
      if (a < opt.a_min || a > opt.a_max) continue;
      Int r = 2 * a - delta;
      Int b = 4 * a - 4 * delta + disc / a;
      Int c = a + b + 2 * r;
      if (r <= 0 || b <= a) {
        out.push_back({a, delta, b, c, SieveStatus::EliminatedBound,
                       "degenerate ordering"});
        continue;
      }
      if (a == disc) {
        out.push_back({a, delta, b, c, SieveStatus::EliminatedCorollary,
                       "a = delta^2-1 triple admits no quintuple"});
        continue;
      }
      SieveVerdict v = run_filters(a, delta, b, c, disc, opt.strict_a_cutoff);
      if (v.status == SieveStatus::Survivor && b <= 130000) {
        v.status = SieveStatus::EliminatedBound;
        v.reason = "b <= 130000";
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

Int b_bound_regular(const Int& a) {
  if (a < 1) throw domain_error("b_bound_regular: a >= 1");
  return a * a * a - 2 * a * ceil_sqrt(3 * a + 1) + 3;
}

Int b_bound_b4a(const Int& a) {
  if (a < 1) throw domain_error("b_bound_b4a: a >= 1");
  return 4 * a - 4 * ceil_sqrt(3 * a + 1) + 3;
}

DeltaTriple delta_family_triple(const Int& Delta) {
  if (Delta < 6) throw domain_error("delta_family_triple: Delta >= 6 required");
  const Int& D = Delta;
  Int D2 = D * D, D3 = D2 * D, D4 = D2 * D2, D6 = D3 * D3;
  DeltaTriple out;
  out.Delta = D;
  Triple& t = out.tr;
  t.sigma = 1;
  t.a = D2 - 1;
  t.b = D6 - 3 * D4 - 2 * D3 + 3 * D2 + 2 * D;
  t.c = D6 - D4 - 2 * D3 + 1;
  t.r = D4 - 2 * D2 - D + 1;
  t.s = D4 - D2 - D;
  t.t = D6 - 2 * D4 - 2 * D3 + D2 + D + 1;
  Int D5 = D4 * D, D7 = D6 * D, D8 = D4 * D4, D9 = D8 * D, D10 = D5 * D5,
      D11 = D10 * D, D12 = D6 * D6, D14 = D7 * D7;
  out.d_plus_value = 4 * D14 - 20 * D12 - 16 * D11 + 40 * D10 + 56 * D9 -
                     16 * D8 - 72 * D7 - 32 * D6 + 24 * D5 + 32 * D4 +
                     8 * D3 - 4 * D2 - 4 * D;
  if (t.r * t.r != t.a * t.b + 1 || t.s * t.s != t.a * t.c + 1 ||
      t.t * t.t != t.b * t.c + 1 || !t.regular() ||
      out.d_plus_value != d_plus(t))
    throw domain_error("delta_family_triple: identity failure");
  return out;
}

}  // namespace dtuples
