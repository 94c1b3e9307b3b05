#include "dtuples/alg_context.hpp"

namespace dtuples {

AlgContext AlgContext::from_triple(const Triple& t, const Int& gap_multiplier,
                                   int branch, long digits) {
  if (branch != 1 && branch != -1)
    throw domain_error("AlgContext: branch must be +-1");
  if (t.sigma != 1 && t.sigma != 4)
    throw domain_error("AlgContext: sigma must be 1 or 4");
  AlgContext ctx;
  ctx.tr = t;
  ctx.branch = branch;
  ctx.digits = digits;
  ctx.gap_multiplier = gap_multiplier;
  ctx.sqrt_a = Real::from_int(t.a, digits).sqrt();
  ctx.sqrt_b = Real::from_int(t.b, digits).sqrt();
  ctx.sqrt_c = Real::from_int(t.c, digits).sqrt();
  const Int unit_den = (t.sigma == 4) ? 2 : 1;
  ctx.alpha =
      (Real::from_int(t.s, digits) + ctx.sqrt_a * ctx.sqrt_c).div_int(unit_den);
  ctx.beta =
      (Real::from_int(t.r, digits) + ctx.sqrt_a * ctx.sqrt_b).div_int(unit_den);
  ctx.gamma =
      (Real::from_int(t.t, digits) + ctx.sqrt_b * ctx.sqrt_c).div_int(unit_den);
  Real sb_sc = ctx.sqrt_b * ctx.sqrt_c;
  Real sa_sc = ctx.sqrt_a * ctx.sqrt_c;
  Real sa_sb = ctx.sqrt_a * ctx.sqrt_b;
  Real signed_ab = (branch > 0) ? sa_sb : -sa_sb;
  ctx.chi = (sb_sc + sa_sc) / (sb_sc + signed_ab);
  Real sa_signed = (branch > 0) ? ctx.sqrt_a : -ctx.sqrt_a;
  Real sb_signed = (branch > 0) ? ctx.sqrt_b : -ctx.sqrt_b;
  ctx.mu = (ctx.sqrt_b * (ctx.sqrt_c + sa_signed)) /
           (ctx.sqrt_a * (ctx.sqrt_c + sb_signed));
  return ctx;
}

AlgContext AlgContext::from_family(const FamilyTriple& f, int branch,
                                   long digits) {
  Int gap = (f.eps < 0) ? f.A - 1 : f.A;
  AlgContext ctx = from_triple(f.tr, gap, branch, digits);
  ctx.N = (f.A * f.A + f.A) * f.K / 2 + f.eps * f.A;
  return ctx;
}

AlgContext AlgContext::from_delta(const DeltaTriple& d, int branch,
                                  long digits) {
  return from_triple(d.tr, d.Delta * d.Delta - 2, branch, digits);
}

Heights heights(const AlgContext& ctx) {
  const Triple& t = ctx.tr;
  Heights h;
  h.h_chi_upper =
      log_int(t.b * t.c * t.c * (t.c - t.a), ctx.digits).div_int(4);
  h.h_alpha_over_beta = ctx.alpha.log().div_int(2);
  return h;
}

Real chi_conjugate_product(const AlgContext& ctx) {
  const Triple& t = ctx.tr;
  return Real::from_ratio(t.b * t.c - t.a * t.c, t.b * t.c - t.a * t.b,
                          ctx.digits);
}

bool sim_approx_check(const FamilyTriple& f, const Int& x, const Int& y,
                      const Int& z, long digits) {
  if (z < 1) throw domain_error("sim_approx_check: z >= 1");
  Int N = (f.A * f.A + f.A) * f.K / 2 + f.eps * f.A;
  Real Nr = Real::from_int(N, digits);
  Real th1 = (Real::from_int(N - f.eps * f.A, digits) / Nr).sqrt();
  Real th2 = (Real::from_int(N + f.eps, digits) / Nr).sqrt();
  Real e1 = (th1 - Real::from_ratio((f.A + 1) * x, z, digits)).abs();
  Real e2 = (th2 - Real::from_ratio((f.A + 1) * y, f.A * z, digits)).abs();
  // 2 (A+1) (A+1+2/K) z^-2
  Real bound = Real::from_ratio(2 * (f.A + 1) * ((f.A + 1) * f.K + 2),
                                f.K * z * z, digits);
  return e1.lt(bound) && e2.lt(bound);
}

}  // namespace dtuples
