#include "dtuples/family.hpp"

namespace dtuples {

Triple Triple::from_elements(const Int& a, const Int& b, const Int& c,
                             const Int& sigma) {
  if (!(0 < a && a < b && b < c))
    throw domain_error("Triple: need 0 < a < b < c");
  Triple t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.sigma = sigma;
  auto root = [&](const Int& u, const Int& v) {
    Int w = u * v + sigma;
    auto r = w >= 0 ? isqrt(w) : IsqrtResult{0, false};
    if (!r.exact) throw domain_error("Triple: product + sigma is not a square");
    return r.root;
  };
  t.r = root(a, b);
  t.s = root(a, c);
  t.t = root(b, c);
  return t;
}

FamilyTriple family_triple(const Int& A, const Int& K, int eps) {
  if (A < 1 || K < 1 || (eps != -2 && eps != -1 && eps != 1 && eps != 2))
    throw domain_error("family_triple: need A,K >= 1 and eps in {-2,-1,1,2}");
  Int a = K;
  Int b = A * A * K + 2 * eps * A;
  Int c = (A + 1) * (A + 1) * K + 2 * eps * (A + 1);
  if (!(0 < a && a < b && b < c))
    throw domain_error("family_triple: degenerate parameters");
  FamilyTriple f;
  f.A = A;
  f.K = K;
  f.eps = eps;
  f.tr.a = a;
  f.tr.b = b;
  f.tr.c = c;
  f.tr.sigma = Int(eps) * eps;
  f.tr.r = A * K + eps;
  f.tr.s = (A + 1) * K + eps;
  f.tr.t = A * (A + 1) * K + (2 * A + 1) * eps;
  // closed forms must agree with direct square extraction
  if (f.tr.r * f.tr.r != a * b + f.tr.sigma ||
      f.tr.s * f.tr.s != a * c + f.tr.sigma ||
      f.tr.t * f.tr.t != b * c + f.tr.sigma || !f.tr.regular())
    throw domain_error("family_triple: internal identity failure");
  return f;
}

namespace {

Int rational_to_int(const Rat& q, const char* who) {
  Rat canon = q;
  canon.canonicalize();
  if (canon.get_den() != 1)
    throw domain_error(std::string(who) + ": non-integral result");
  return canon.get_num();
}

}  // namespace

Int d_plus(const Triple& t) {
  Rat v = Rat(t.a + t.b + t.c) +
          Rat(2 * (t.a * t.b * t.c + t.r * t.s * t.t), t.sigma);
  return rational_to_int(v, "d_plus");
}

Int d_minus(const Triple& t) {
  Rat v = Rat(t.a + t.b + t.c) +
          Rat(2 * (t.a * t.b * t.c - t.r * t.s * t.t), t.sigma);
  return rational_to_int(v, "d_minus");
}

Int d_plus_closed(const Int& A, const Int& K, int eps) {
  Int e(eps);
  Rat v = Rat((2 * A * A + 2 * A) * (2 * A * A + 2 * A) * K * K * K, e * e) +
          Rat((16 * A * A * A + 24 * A * A + 8 * A) * K * K, e) +
          Rat((20 * A * A + 20 * A + 4) * K) + Rat(e * (8 * A + 4));
  return rational_to_int(v, "d_plus_closed");
}

Int dual_map(const Int& A, const Int& K) {
  if (K < 1 || 4 % K != 0)
    throw domain_error("dual_map: K must divide 4");
  Int B = A - 4 / K;
  if (B < 1) throw domain_error("dual_map: need A > 4/K");
  // elementwise identity of the two presentations
  Int lhs_b = A * A * K - 4 * A;
  Int rhs_b = B * B * K + 4 * B;
  Int lhs_c = (A + 1) * (A + 1) * K - 4 * (A + 1);
  Int rhs_c = (B + 1) * (B + 1) * K + 4 * (B + 1);
  if (lhs_b != rhs_b || lhs_c != rhs_c)
    throw domain_error("dual_map: identity failure");
  return B;
}

std::optional<FamilyTriple> to_family_form(const Int& a, const Int& b,
                                           const Int& c, int eps) {
  Int sigma = Int(eps) * eps;
  Triple t = Triple::from_elements(a, b, c, sigma);
  if (!t.regular()) throw domain_error("to_family_form: triple not regular");
  for (int e : {eps, -eps}) {
    Int num = t.r - e;
    if (num % a == 0 && num > 0) {
      Int k = num / a;
      try {
        FamilyTriple f = family_triple(k, a, e);
        if (f.tr.a == a && f.tr.b == b && f.tr.c == c) return f;
      } catch (const domain_error&) {
        // fall through to the other sign
      }
    }
  }
  return std::nullopt;
}

}  // namespace dtuples
