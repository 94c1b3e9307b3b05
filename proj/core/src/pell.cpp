#include "dtuples/pell.hpp"

#include <algorithm>
#include <sstream>

namespace dtuples {

namespace {

PellEquation make_eq(const Int& p, const Int& q, const Int& sigma,
                     const Int& unit) {
  PellEquation eq;
  eq.p = p;
  eq.q = q;
  eq.sigma = sigma;
  eq.rhs = sigma * (p - q);
  eq.s = unit;
  if (eq.s * eq.s != p * q + sigma)
    throw domain_error("PellEquation: unit identity failure");
  return eq;
}

}  // namespace

PellSystem pell_system(const Triple& tr) {
  PellSystem sys;
  sys.tr = tr;
  sys.zx = make_eq(tr.a, tr.c, tr.sigma, tr.s);
  sys.zy = make_eq(tr.b, tr.c, tr.sigma, tr.t);
  sys.yx = make_eq(tr.a, tr.b, tr.sigma, tr.r);
  return sys;
}

Int z_window(const Int& p, const Int& q) {
  // smallest W with W^4 * p >= q^3
  Int t = q * q * q;
  Int w;
  mpz_root(w.get_mpz_t(), Int(t / p).get_mpz_t(), 4);
  while (w * w * w * w * p < t) ++w;
  return w;
}

namespace {

// backward unit step; true when it yields a strictly smaller solution
bool reducible(const PellEquation& eq, const Int& z, const Int& x) {
  const int den = (eq.sigma == 4) ? 2 : 1;
  Int zb = eq.s * z - eq.q * x;
  Int xb = eq.s * x - eq.p * z;
  if (den == 2) {
    if (zb % 2 != 0 || xb % 2 != 0) return false;
    zb /= 2;
    xb /= 2;
  }
  return xb >= 1 && abs(zb) < abs(z);
}

void consider(const PellEquation& eq, const Int& z, std::vector<FundSol>& out) {
  Int num = eq.p * z * z - eq.rhs;
  if (num <= 0) return;
  if (num % eq.q != 0) return;
  auto r = isqrt(num / eq.q);
  if (!r.exact || r.root < 1) return;
  out.push_back({z, r.root, !reducible(eq, z, r.root)});
  if (z != 0) out.push_back({-z, r.root, !reducible(eq, -z, r.root)});
}

}  // namespace

std::vector<FundSol> fundamental_solutions(const PellEquation& eq,
                                           const Int& z_bound) {
  if (eq.p < 1 || eq.q < 1 || z_bound < 1)
    throw domain_error("fundamental_solutions: need p,q,z_bound >= 1");
  std::vector<FundSol> out;
  if (z_bound <= 2'000'000) {
    for (Int z = 0; z <= z_bound; ++z) consider(eq, z, out);
  } else {
    // p z^2 = rhs (mod q): reduce by g = gcd(p, q), then z^2 = r' (mod q/g)
    Int g = gcd(eq.p, eq.q);
    if (eq.rhs % g != 0) return {};
    Int q1 = eq.q / g, p1 = eq.p / g, r1 = eq.rhs / g;
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), p1.get_mpz_t(), q1.get_mpz_t()))
      throw domain_error("fundamental_solutions: non-invertible reduction");
    Int target = (r1 * inv) % q1;
    if (target < 0) target += q1;
    // sqrt_mod returns every class in [0, q1), mirrored ones included
    for (const Int& rho : sqrt_mod(target, q1))
      for (Int z = rho; z <= z_bound; z += q1) consider(eq, z, out);
  }
  std::sort(out.begin(), out.end(), [](const FundSol& a, const FundSol& b) {
    if (a.z0 != b.z0) return a.z0 < b.z0;
    return a.x0 < b.x0;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FundSol& a, const FundSol& b) {
                          return a.z0 == b.z0 && a.x0 == b.x0;
                        }),
            out.end());
  return out;
}

ClassifyReport classify_fundamentals(const Triple& tr) {
  if (tr.sigma != 4)
    throw domain_error("classify_fundamentals: requires a D(4)-triple");
  ClassifyReport rep;
  Int cr_st = tr.c * tr.r - tr.s * tr.t;
  if (cr_st % 2 != 0)
    throw domain_error("classify_fundamentals: cr - st is odd");
  rep.half_cr_minus_st = cr_st / 2;

  const Int c3 = tr.c * tr.c * tr.c;
  // cases with |z0| = t need t^2 < a^(-1/2) c^(3/2), i.e. a t^4 < c^3
  Int t2 = tr.b * tr.c + tr.sigma;
  rep.case_bd_excluded = tr.a * t2 * t2 >= c3;
  // case with |z1| = s needs s^2 < b^(-1/2) c^(3/2)
  Int s2 = tr.a * tr.c + tr.sigma;
  rep.case_c_excluded = tr.b * s2 * s2 >= c3;

  // the interior option |z0| < 1.608 a^(-5/14) c^(9/14) would produce a
  // quadruple {a, (z0^2-4)/c, b, c}, forcing
  // c > min{0.173 b^13/2 a^11/2, 0.087 b^7/2 a^5/2}; refuted exactly.
  Int lhs = Int(1000000) * tr.c * tr.c;
  Int b13, a11, b7, a5;
  mpz_pow_ui(b13.get_mpz_t(), tr.b.get_mpz_t(), 13);
  mpz_pow_ui(a11.get_mpz_t(), tr.a.get_mpz_t(), 11);
  mpz_pow_ui(b7.get_mpz_t(), tr.b.get_mpz_t(), 7);
  mpz_pow_ui(a5.get_mpz_t(), tr.a.get_mpz_t(), 5);
  rep.interior_excluded = lhs <= 29929 * b13 * a11 && lhs <= 7569 * b7 * a5;

  rep.only_pm2 = rep.case_bd_excluded && rep.case_c_excluded &&
                 rep.interior_excluded && rep.half_cr_minus_st == 2;
  std::ostringstream os;
  os << "(cr-st)/2=" << rep.half_cr_minus_st
     << " bd_excluded=" << rep.case_bd_excluded
     << " c_excluded=" << rep.case_c_excluded
     << " interior_excluded=" << rep.interior_excluded;
  rep.detail = os.str();
  return rep;
}

std::vector<Int> seq_generate(const RecurrenceSeq& seq, int count) {
  if (count < 1) throw domain_error("seq_generate: count >= 1");
  std::vector<Int> out;
  out.reserve(count);
  out.push_back(seq.u0);
  if (count == 1) return out;
  out.push_back(seq.u1);
  for (int k = 2; k < count; ++k)
    out.push_back(seq.coeff * out[k - 1] - out[k - 2]);
  return out;
}

std::vector<Int> seq_mod_pattern(const RecurrenceSeq& seq, const Int& M,
                                 int count) {
  if (M < 2) throw domain_error("seq_mod_pattern: modulus >= 2");
  std::vector<Int> out;
  out.reserve(count);
  auto mod = [&](const Int& v) {
    Int m = v % M;
    if (m < 0) m += M;
    return m;
  };
  Int prev = mod(seq.u0), cur = mod(seq.u1);
  out.push_back(prev);
  if (count == 1) return out;
  out.push_back(cur);
  Int cm = mod(seq.coeff);
  for (int k = 2; k < count; ++k) {
    Int next = mod(cm * cur - prev);
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

RecurrenceSeq z_sequence(const PellEquation& eq, const Int& z0, const Int& x0) {
  const int den = (eq.sigma == 4) ? 2 : 1;
  Int v1num = eq.s * z0 + eq.q * x0;
  if (v1num % den != 0)
    throw domain_error("z_sequence: initial term parity failure");
  RecurrenceSeq seq;
  seq.u0 = z0;
  seq.u1 = v1num / den;
  seq.coeff = (eq.sigma == 4) ? eq.s : 2 * eq.s;
  return seq;
}

std::vector<Intersection> intersect(const RecurrenceSeq& v,
                                    const RecurrenceSeq& w, const Int& z_cap) {
  if (z_cap < 1) throw domain_error("intersect: z_cap >= 1");
  auto terms = [&](const RecurrenceSeq& s) {
    std::vector<Int> out{s.u0};
    Int prev = s.u0, cur = s.u1;
    while (cur <= z_cap) {
      if (cur <= prev)
        throw domain_error("intersect: sequence not increasing");
      out.push_back(cur);
      Int next = s.coeff * cur - prev;
      prev = cur;
      cur = next;
      if (out.size() > 100000)
        throw domain_error("intersect: sequence too slow");
    }
    return out;
  };
  std::vector<Int> vs = terms(v), ws = terms(w);
  std::vector<Intersection> out;
  size_t i = 0, j = 0;
  while (i < vs.size() && j < ws.size()) {
    if (vs[i] == ws[j]) {
      if (vs[i] <= z_cap)
        out.push_back({static_cast<int>(i), static_cast<int>(j), vs[i]});
      ++i;
      ++j;
    } else if (vs[i] < ws[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

std::optional<Int> solution_to_d(const Int& z, const Int& c, const Int& sigma) {
  if (z < 0) throw domain_error("solution_to_d: z >= 0");
  Int num = z * z - sigma;
  if (num <= 0 || num % c != 0) return std::nullopt;
  Int d = num / c;
  if (d < 1) return std::nullopt;
  return d;
}

MixedParityCheck mixed_parity_check(const Triple& tr) {
  PellSystem sys = pell_system(tr);
  // window a y^4 < b^3
  Int b3 = tr.b * tr.b * tr.b;
  Int w;
  mpz_root(w.get_mpz_t(), Int(b3 / tr.a).get_mpz_t(), 4);
  while ((w + 1) * (w + 1) * (w + 1) * (w + 1) * tr.a < b3) ++w;
  while (w > 0 && w * w * w * w * tr.a >= b3) --w;
  MixedParityCheck out;
  out.obstruction_fails = true;
  for (const FundSol& f : fundamental_solutions(sys.yx, w)) {
    if (tr.a * f.z0 * f.z0 * f.z0 * f.z0 >= b3) continue;
    if (f.x0 * f.x0 >= tr.b) continue;
    Int combo = tr.b * f.x0 - tr.r * abs(f.z0);
    out.window.push_back({f.z0, f.x0, combo});
    if (combo == tr.sigma) out.obstruction_fails = false;
  }
  return out;
}

std::vector<Int> extensions_via_pell(const Triple& tr, const Int& d_max) {
  PellSystem sys = pell_system(tr);
  Int z_cap = isqrt(tr.c * d_max + tr.sigma).root;
  if (z_cap < 1) return {};
  std::vector<Int> out;
  auto branch_seqs = [&](const PellEquation& eq) {
    std::vector<RecurrenceSeq> seqs;
    for (const FundSol& f :
         fundamental_solutions(eq, z_window(eq.p, eq.q)))
      if (f.fundamental) seqs.push_back(z_sequence(eq, f.z0, f.x0));
    return seqs;
  };
  for (const RecurrenceSeq& v : branch_seqs(sys.zx))
    for (const RecurrenceSeq& w : branch_seqs(sys.zy))
      for (const Intersection& is : intersect(v, w, z_cap)) {
        if (is.z < 0) continue;
        if (auto d = solution_to_d(is.z, tr.c, tr.sigma); d && *d <= d_max)
          out.push_back(*d);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dtuples
