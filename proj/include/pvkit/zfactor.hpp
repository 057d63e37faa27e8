#pragma once

// Exact factorization of squarefree polynomials over Z (and hence Q):
// Cantor-Zassenhaus mod p, linear Hensel lifting to a Mignotte-style bound,
// then subset recombination. Everything is deterministic: fixed prime search
// origin and a fixed-seed RNG for the equal-degree splitting.

#include <cstdint>
#include <optional>
#include <random>

#include "pvkit/poly.hpp"

namespace pvkit {
namespace detail {

using u64 = std::uint64_t;
using PPoly = std::vector<u64>;    // mod-p poly, lowest first, trimmed
using ZPolyV = std::vector<Integer>;  // integer poly, lowest first, trimmed

inline u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) { return (a * b) % p; }

inline u64 powm(u64 a, u64 e, u64 p) {
  u64 acc = 1 % p;
  while (e) {
    if (e & 1) acc = mulm(acc, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return acc;
}
inline u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

inline void pp_trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int pp_deg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

inline PPoly pp_mul(const PPoly& a, const PPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  }
  pp_trim(r);
  return r;
}

inline PPoly pp_monic(PPoly f, u64 p) {
  pp_trim(f);
  if (f.empty() || f.back() == 1) return f;
  u64 inv = invm(f.back(), p);
  for (u64& c : f) c = mulm(c, inv, p);
  return f;
}

// Remainder of a by b (b nonzero).
inline PPoly pp_mod(PPoly a, const PPoly& b, u64 p) {
  pp_trim(a);
  u64 lead_inv = invm(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulm(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = subm(a[shift + j], mulm(c, b[j], p), p);
    a.pop_back();
    pp_trim(a);
  }
  return a;
}

inline PPoly pp_divexact(PPoly a, const PPoly& b, u64 p) {
  pp_trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error("pp_divexact: inexact division");
  PPoly q(a.size() - b.size() + 1, 0);
  u64 lead_inv = invm(b.back(), p);
  for (std::size_t qi = q.size(); qi-- > 0;) {
    u64 c = mulm(a[qi + b.size() - 1], lead_inv, p);
    q[qi] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j)
        a[qi + j] = subm(a[qi + j], mulm(c, b[j], p), p);
  }
  pp_trim(q);
  return q;
}

inline PPoly pp_gcd(PPoly a, PPoly b, u64 p) {
  pp_trim(a);
  pp_trim(b);
  while (!b.empty()) {
    PPoly r = pp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pp_monic(std::move(a), p);
}

inline PPoly pp_derivative(const PPoly& f, u64 p) {
  if (f.size() <= 1) return {};
  PPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mulm(f[i], i % p, p);
  pp_trim(r);
  return r;
}

// base^e mod f, with an arbitrary-precision exponent.
inline PPoly pp_powmod(const PPoly& base, const Integer& e, const PPoly& f,
                       u64 p) {
  PPoly acc{1};
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (std::size_t i = bits; i-- > 0;) {
    acc = pp_mod(pp_mul(acc, acc, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i))
      acc = pp_mod(pp_mul(acc, base, p), f, p);
  }
  return acc;
}

// Equal-degree splitting: u is monic squarefree, a product of irreducibles all
// of degree d. Appends them to out.
inline void pp_edf(const PPoly& u, int d, u64 p, std::mt19937_64& rng,
                   std::vector<PPoly>& out) {
  if (pp_deg(u) == d) {
    out.push_back(u);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  Integer exponent = (pd - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    PPoly r(static_cast<std::size_t>(pp_deg(u)), 0);
    for (u64& c : r) c = dist(rng);
    pp_trim(r);
    if (pp_deg(r) < 1) continue;
    PPoly g = pp_gcd(r, u, p);
    if (pp_deg(g) > 0 && pp_deg(g) < pp_deg(u)) {
      pp_edf(g, d, p, rng, out);
      pp_edf(pp_divexact(u, g, p), d, p, rng, out);
      return;
    }
    PPoly s = pp_powmod(r, exponent, u, p);
    if (s.empty())
      continue;
    s[0] = subm(s[0], 1, p);
    pp_trim(s);
    g = pp_gcd(s, u, p);
    if (pp_deg(g) > 0 && pp_deg(g) < pp_deg(u)) {
      pp_edf(g, d, p, rng, out);
      pp_edf(pp_divexact(u, g, p), d, p, rng, out);
      return;
    }
  }
}

// Full factorization of a monic squarefree f mod p into monic irreducibles.
inline std::vector<PPoly> pp_factor_squarefree(const PPoly& f, u64 p) {
  std::vector<PPoly> out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (p * 1315423911ULL) ^
                      (static_cast<u64>(pp_deg(f)) << 32));
  PPoly g = f;
  PPoly h{0, 1};  // x
  h = pp_mod(h, g, p);
  int d = 0;
  while (pp_deg(g) > 0) {
    ++d;
    if (2 * d > pp_deg(g)) {
      out.push_back(pp_monic(g, p));
      break;
    }
    h = pp_powmod(h, Integer(static_cast<unsigned long>(p)), g, p);
    PPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = subm(hx[1], 1, p);
    pp_trim(hx);
    PPoly gd = pp_gcd(hx, g, p);
    if (pp_deg(gd) > 0) {
      pp_edf(gd, d, p, rng, out);
      g = pp_divexact(g, gd, p);
      h = pp_mod(h, g, p);
    }
  }
  return out;
}

inline void zv_trim(ZPolyV& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int zv_deg(const ZPolyV& f) { return static_cast<int>(f.size()) - 1; }

inline ZPolyV zv_mul(const ZPolyV& a, const ZPolyV& b) {
  if (a.empty() || b.empty()) return {};
  ZPolyV r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Attempts exact division a / b for monic-lead b; nullopt if not divisible.
inline std::optional<ZPolyV> zv_try_divexact(ZPolyV a, const ZPolyV& b) {
  zv_trim(a);
  if (a.empty()) return ZPolyV{};
  if (a.size() < b.size()) return std::nullopt;
  ZPolyV q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t qi = q.size(); qi-- > 0;) {
    const Integer& top = a[qi + b.size() - 1];
    Integer c = top / b.back();
    if (c * b.back() != top) return std::nullopt;
    q[qi] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[qi + j] -= c * b[j];
  }
  for (const Integer& c : a)
    if (c != 0) return std::nullopt;
  return q;
}

inline PPoly zv_to_pp(const ZPolyV& f, u64 p) {
  PPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p));
  pp_trim(r);
  return r;
}

// Symmetric representative of z mod m, in (-m/2, m/2].
inline Integer sym_mod(const Integer& z, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

// Linear Hensel lifting: G monic over Z, factors monic mod p with product
// congruent to G mod p and pairwise coprime. Lifts in place until the modulus
// reaches at least `target`; returns the final modulus.
inline Integer hensel_lift(const ZPolyV& G, std::vector<ZPolyV>& factors, u64 p,
                           const Integer& target) {
  std::size_t r = factors.size();
  // Bezout data mod p: s_i * prod_{j != i} f_j == 1 mod (f_i, p).
  std::vector<PPoly> fp(r), s(r);
  for (std::size_t i = 0; i < r; ++i) fp[i] = zv_to_pp(factors[i], p);
  for (std::size_t i = 0; i < r; ++i) {
    PPoly prod{1};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) prod = pp_mod(pp_mul(prod, fp[j], p), fp[i], p);
    // Invert prod mod f_i via extended Euclid in F_p[x].
    PPoly r0 = fp[i], r1 = prod, t0{}, t1{1};
    while (!r1.empty()) {
      // q, rem of r0 / r1
      PPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
      PPoly rem = r0;
      u64 lead_inv = invm(r1.back(), p);
      while (rem.size() >= r1.size()) {
        u64 c = mulm(rem.back(), lead_inv, p);
        std::size_t shift = rem.size() - r1.size();
        q[shift] = c;
        if (c != 0)
          for (std::size_t j = 0; j < r1.size(); ++j)
            rem[shift + j] = subm(rem[shift + j], mulm(c, r1[j], p), p);
        rem.pop_back();
        pp_trim(rem);
      }
      pp_trim(q);
      PPoly t2 = t0;
      PPoly qt = pp_mul(q, t1, p);
      if (qt.size() > t2.size()) t2.resize(qt.size(), 0);
      for (std::size_t j = 0; j < qt.size(); ++j) t2[j] = subm(t2[j], qt[j], p);
      pp_trim(t2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (pp_deg(r0) != 0) throw Error("hensel_lift: factors not coprime mod p");
    u64 scale = invm(r0[0], p);
    for (u64& c : t0) c = mulm(c, scale, p);
    s[i] = pp_mod(t0, fp[i], p);
  }

  Integer modulus(static_cast<unsigned long>(p));
  while (modulus < target) {
    // Error term E = (G - prod factors) / modulus mod p.
    ZPolyV prod{Integer(1)};
    for (const ZPolyV& f : factors) prod = zv_mul(prod, f);
    ZPolyV diff = G;
    if (prod.size() > diff.size()) diff.resize(prod.size(), Integer(0));
    for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    PPoly E(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      Integer q = diff[i] / modulus;
      if (q * modulus != diff[i])
        throw Error("hensel_lift: error term not divisible by modulus");
      E[i] = mpz_fdiv_ui(q.get_mpz_t(), static_cast<unsigned long>(p));
    }
    pp_trim(E);
    for (std::size_t i = 0; i < r; ++i) {
      PPoly delta = pp_mod(pp_mul(E, s[i], p), fp[i], p);
      if (factors[i].size() < delta.size() + 1)
        factors[i].resize(delta.size() + 1, Integer(0));
      for (std::size_t j = 0; j < delta.size(); ++j)
        factors[i][j] += modulus * Integer(static_cast<unsigned long>(delta[j]));
    }
    modulus *= static_cast<unsigned long>(p);
  }
  // Normalize coefficients to symmetric representatives mod the final modulus.
  for (ZPolyV& f : factors)
    for (std::size_t j = 0; j + 1 < f.size(); ++j) f[j] = sym_mod(f[j], modulus);
  return modulus;
}

// Monic squarefree G over Z -> monic irreducible integer factors (Zassenhaus).
inline std::vector<ZPolyV> zassenhaus_monic_squarefree(const ZPolyV& G) {
  int n = zv_deg(G);
  if (n <= 1) return {G};

  // Prime selection: first few odd primes >= 2^30 keeping G squarefree mod p;
  // among the first three usable ones, keep the factorization with the fewest
  // modular factors.
  std::vector<PPoly> best;
  u64 best_p = 0;
  Integer probe = (Integer(1) << 30) + 1;
  int usable = 0;
  while (usable < 3) {
    mpz_nextprime(probe.get_mpz_t(), probe.get_mpz_t());
    u64 p = probe.get_ui();
    PPoly gp = zv_to_pp(G, p);
    if (pp_deg(gp) != n) continue;  // p divides the leading coefficient
    PPoly d = pp_derivative(gp, p);
    if (pp_deg(pp_gcd(gp, d, p)) != 0) continue;
    std::vector<PPoly> fac = pp_factor_squarefree(pp_monic(gp, p), p);
    ++usable;
    if (best.empty() || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {G};

  // Mignotte-style bound: any monic factor h of G has |h|_inf <= 2^n * |G|_2.
  Integer norm2_sq(0);
  for (const Integer& c : G) norm2_sq += c * c;
  Integer norm2 = sqrt(norm2_sq) + 1;
  Integer bound = (Integer(1) << n) * norm2;
  Integer target = 2 * bound + 1;

  std::vector<ZPolyV> lifted(best.size());
  for (std::size_t i = 0; i < best.size(); ++i) {
    lifted[i].resize(best[i].size());
    for (std::size_t j = 0; j < best[i].size(); ++j)
      lifted[i][j] = Integer(static_cast<unsigned long>(best[i][j]));
  }
  Integer modulus = hensel_lift(G, lifted, best_p, target);

  // Subset recombination.
  std::vector<ZPolyV> result;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  ZPolyV rem = G;

  auto next_combination = [](std::vector<std::size_t>& idx,
                             std::size_t limit) -> bool {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] + (k - i) < limit) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  std::size_t size = 1;
  while (2 * size <= live.size()) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    bool found = false;
    do {
      ZPolyV cand{Integer(1)};
      for (std::size_t i : idx) cand = zv_mul(cand, lifted[live[i]]);
      for (Integer& c : cand) c = sym_mod(c, modulus);
      zv_trim(cand);
      auto q = zv_try_divexact(rem, cand);
      if (q) {
        result.push_back(cand);
        rem = std::move(*q);
        zv_trim(rem);
        std::vector<std::size_t> nl;
        for (std::size_t i = 0, k = 0; i < live.size(); ++i) {
          if (k < idx.size() && idx[k] == i)
            ++k;
          else
            nl.push_back(live[i]);
        }
        live = std::move(nl);
        found = true;
        break;
      }
    } while (next_combination(idx, live.size()));
    if (!found) ++size;
  }
  if (zv_deg(rem) > 0) result.push_back(rem);
  return result;
}

}  // namespace detail
}  // namespace pvkit
