#include "dtuples/extensions.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dtuples {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// qr_tab[m] flags the quadratic residues mod m
template <int M>
constexpr std::array<bool, M> qr_table() {
  std::array<bool, M> t{};
  for (int i = 0; i < M; ++i) t[(i * i) % M] = true;
  return t;
}
constexpr auto kQr64 = qr_table<64>();
constexpr auto kQr63 = qr_table<63>();
constexpr auto kQr65 = qr_table<65>();
constexpr auto kQr11 = qr_table<11>();
constexpr auto kQr13 = qr_table<13>();
constexpr auto kQr17 = qr_table<17>();

constexpr u64 kFoldMod = 63ull * 65 * 11 * 13 * 17;  // 9954945
// 2^64 mod kFoldMod, by squaring 2^32 mod kFoldMod
constexpr u64 kFold64 = ((1ull << 32) % kFoldMod) * ((1ull << 32) % kFoldMod) % kFoldMod;

inline bool qr_filters_pass(u128 n) {
  if (!kQr64[static_cast<unsigned>(n) & 63u]) return false;
  const u64 lo = static_cast<u64>(n), hi = static_cast<u64>(n >> 64);
  const u64 v = (lo % kFoldMod + (hi % kFoldMod) * kFold64) % kFoldMod;
  return kQr63[v % 63] && kQr65[v % 65] && kQr11[v % 11] && kQr13[v % 13] &&
         kQr17[v % 17];
}

inline u64 isqrt_u128(u128 n) {
  u64 x = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  if (x < 2) x = 2;
  // two Newton steps absorb the double rounding, then a bounded fixup
  x = static_cast<u64>((x + n / x) / 2);
  x = static_cast<u64>((x + n / x) / 2);
  while (static_cast<u128>(x) * x > n) --x;
  while (static_cast<u128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

inline bool is_square_u128(u128 n, u64* root) {
  if (!qr_filters_pass(n)) return false;
  u64 r = isqrt_u128(n);
  if (static_cast<u128>(r) * r != n) return false;
  *root = r;
  return true;
}

void scan_class_u128(u64 a, u64 b, u64 c, u64 sigma, u64 rho, u64 z_lo,
                     u64 z_hi, u64 d_max, std::vector<Int>& out) {
  // first z >= z_lo with z = rho (mod c)
  u64 z = rho;
  if (z < z_lo) z += ((z_lo - rho) + c - 1) / c * c;
  if (z > z_hi) return;

  u128 zz = static_cast<u128>(z) * z;
  u64 d = static_cast<u64>((zz - sigma) / c);
  u128 tb = static_cast<u128>(b) * d + sigma;  // b*d + sigma
  u64 dd = 2 * z + c;                          // d increment
  const u64 two_c = 2 * c;

  for (;;) {
    if (d >= 1 && d <= d_max && qr_filters_pass(tb)) {
      u64 ry = isqrt_u128(tb);
      if (static_cast<u128>(ry) * ry == tb) {
        u128 ta = static_cast<u128>(a) * d + sigma;
        u64 rx;
        if (is_square_u128(ta, &rx) && d != a && d != b && d != c)
          out.push_back(Int(static_cast<unsigned long>(d)));
      }
    }
    if (z + c > z_hi) break;
    z += c;
    tb += static_cast<u128>(b) * dd;
    d += dd;
    dd += two_c;
  }
}

std::vector<Int> brute_force_u128(const Triple& t, const Int& d_max_z) {
  const u64 a = t.a.get_ui(), b = t.b.get_ui(), c = t.c.get_ui(),
            sigma = t.sigma.get_ui();
  const u64 d_max = d_max_z.get_ui();

  const u128 top = static_cast<u128>(c) * d_max + sigma;
  const u64 z_hi = isqrt_u128(top);
  const u64 z_lo = [&] {
    // smallest z with z^2 >= c + sigma  (d >= 1)
    u64 v = isqrt_u128(static_cast<u128>(c) + sigma);
    if (static_cast<u128>(v) * v < static_cast<u128>(c) + sigma) ++v;
    return v;
  }();
  if (z_lo > z_hi) return {};

  std::vector<Int> out;
  for (const Int& rho_z : sqrt_mod(Int(static_cast<unsigned long>(sigma)),
                                   t.c)) {
    u64 rho = rho_z.get_ui();
    scan_class_u128(a, b, c, sigma, rho, z_lo, z_hi, d_max, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Int> brute_force_mpz(const Triple& t, const Int& d_max) {
  std::vector<Int> out;
  Int z_hi = isqrt(t.c * d_max + t.sigma).root;
  Int z_lo = ceil_sqrt(t.c + t.sigma);
  for (const Int& rho : sqrt_mod(t.sigma, t.c)) {
    Int z = rho;
    if (z < z_lo) z += (z_lo - rho + t.c - 1) / t.c * t.c;
    for (; z <= z_hi; z += t.c) {
      Int d = (z * z - t.sigma) / t.c;
      if (d < 1 || d > d_max || d == t.a || d == t.b || d == t.c) continue;
      if (is_perfect_square(t.b * d + t.sigma) &&
          is_perfect_square(t.a * d + t.sigma))
        out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Int> brute_force_extensions(const Triple& t, const Int& d_max) {
  if (d_max < 1) return {};
  // 128-bit fast path: c*d_max and b*d_max must stay far below 2^126,
  // and all step quantities below 2^63.
  static const Int kDLimit = Int(1) << 62;
  static const Int kProdLimit = Int(1) << 120;
  if (t.c < (Int(1) << 40) && d_max < kDLimit &&
      t.c * d_max < kProdLimit && t.b * d_max < kProdLimit)
    return brute_force_u128(t, d_max);
  return brute_force_mpz(t, d_max);
}

}  // namespace dtuples
