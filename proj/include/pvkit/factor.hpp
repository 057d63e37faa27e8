#pragma once

// Irreducible factorization over the constants field Q(zeta_N): factor over Q
// with Zassenhaus, then refine over the cyclotomic field with Trager's norm
// method. Norms are computed by evaluation and Lagrange interpolation, which
// keeps the resultant machinery univariate.

#include <algorithm>

#include "pvkit/zfactor.hpp"

namespace pvkit {

struct Factorization {
  CycloNum unit;                              // leading coefficient of the input
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity

  Poly reassemble() const {
    Poly p(unit);
    for (const auto& [f, e] : factors) p = p * f.pow(e);
    return p;
  }
};

namespace detail {

inline QPoly qpoly_from_z(const ZPolyV& f) {
  std::vector<Rational> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rational(f[i]);
  return QPoly(std::move(c));
}

// Monic squarefree f over Q -> monic irreducible rational factors.
inline std::vector<QPoly> factor_q_squarefree(const QPoly& f) {
  if (f.deg() <= 1) return {f};
  // Clear denominators to a primitive integer polynomial.
  Integer den(1);
  for (const Rational& c : f.coeffs()) den = int_lcm(den, c.get_den());
  ZPolyV F(f.coeffs().size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    Rational scaled = f.coeffs()[i] * Rational(den);
    F[i] = scaled.get_num();
  }
  Integer content(0);
  for (const Integer& c : F) content = int_gcd(content, c);
  for (Integer& c : F) c /= content;

  // Monicize: G(x) = L^(n-1) * F(x/L) with L the leading coefficient, so
  // G[i] = F[i] * L^(n-1-i) and G is monic with integer coefficients.
  int n = zv_deg(F);
  Integer L = F.back();
  ZPolyV G(F.size());
  G[static_cast<std::size_t>(n)] = 1;
  Integer scale(1);
  for (int i = n - 1; i >= 0; --i) {
    G[i] = F[i] * scale;
    scale *= L;
  }
  std::vector<ZPolyV> zfac = zassenhaus_monic_squarefree(G);

  // Map back: a monic factor H of G corresponds to H(Lx)/L^deg(H) of f.
  std::vector<QPoly> out;
  for (const ZPolyV& H : zfac) {
    std::vector<Rational> c(H.size());
    Integer pw(1);
    Integer top(1);
    mpz_pow_ui(top.get_mpz_t(), L.get_mpz_t(),
               static_cast<unsigned long>(H.size() - 1));
    for (std::size_t i = 0; i < H.size(); ++i) {
      c[i] = Rational(H[i] * pw, top);
      c[i].canonicalize();
      pw *= L;
    }
    out.push_back(QPoly(std::move(c)));
  }
  return out;
}

inline bool poly_all_rational(const Poly& f) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                     [](const CycloNum& c) { return c.is_rational(); });
}

inline QPoly poly_to_qpoly(const Poly& f) {
  std::vector<Rational> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f.coeffs()[i].rational_value();
  return QPoly(std::move(c));
}

inline Poly qpoly_to_poly(const QPoly& f) {
  std::vector<CycloNum> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = CycloNum(f.coeffs()[i]);
  return Poly(std::move(c));
}

// Coefficients of v on the power basis of Q(zeta_level), as a Q-polynomial in
// the auxiliary variable representing zeta.
inline QPoly cyclo_rep(const CycloNum& v, long level) {
  return QPoly(std::vector<Rational>(v.promoted(level).coeffs()));
}

// Norm from Q(zeta_level)[x] down to Q[x], by evaluation + interpolation.
inline QPoly cyclo_norm(const Poly& f, long level) {
  const std::vector<Integer>& phi_z = cyclotomic_polynomial(level);
  QPoly phi = qpoly_from_z(ZPolyV(phi_z.begin(), phi_z.end()));
  long d = static_cast<long>(f.deg()) * (static_cast<long>(phi_z.size()) - 1);
  std::vector<Rational> points(static_cast<std::size_t>(d) + 1);
  std::vector<Rational> values(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i] = Rational(static_cast<long>(i));
    CycloNum v = f.eval(CycloNum(points[i]));
    values[i] = poly_resultant(phi, cyclo_rep(v, level));
  }
  return poly_interpolate(points, values);
}

// Trager refinement: f monic squarefree over Q(zeta_level), degree >= 2.
inline std::vector<Poly> trager_factor(const Poly& f, long level) {
  CycloNum zeta = CycloNum::zeta(level);
  for (long k = 0;; ++k) {
    long s = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);  // 0, -1, 1, -2, 2, ...
    Poly fs = poly_shift(f, CycloNum(s) * zeta);
    QPoly norm = cyclo_norm(fs, level);
    if (poly_gcd(norm, norm.derivative()).deg() != 0) continue;
    std::vector<QPoly> qfac = factor_q_squarefree(norm.monic());
    if (qfac.size() == 1) return {f};
    std::vector<Poly> out;
    for (const QPoly& h : qfac) {
      Poly g = poly_gcd(fs, qpoly_to_poly(h));
      if (g.deg() < 1) continue;
      out.push_back(poly_shift(g, CycloNum(-s) * zeta).monic());
    }
    return out;
  }
}

// Monic squarefree f over Q(zeta_level) -> monic irreducible factors.
inline std::vector<Poly> factor_c0_squarefree(const Poly& f, long level) {
  if (f.deg() <= 1) return {f};
  if (euler_phi(level) == 1) {
    if (!poly_all_rational(f))
      throw Error("factor: non-rational coefficients at rational level");
    std::vector<Poly> out;
    for (const QPoly& h : factor_q_squarefree(poly_to_qpoly(f)))
      out.push_back(qpoly_to_poly(h));
    return out;
  }
  if (poly_all_rational(f)) {
    std::vector<Poly> out;
    for (const QPoly& h : factor_q_squarefree(poly_to_qpoly(f))) {
      if (h.deg() == 1) {
        out.push_back(qpoly_to_poly(h));
        continue;
      }
      std::vector<Poly> refined = trager_factor(qpoly_to_poly(h), level);
      out.insert(out.end(), refined.begin(), refined.end());
    }
    return out;
  }
  return trager_factor(f, level);
}

inline long poly_level(const Poly& f) {
  long level = 1;
  for (const CycloNum& c : f.coeffs()) level = std::lcm(level, c.level());
  return level;
}

}  // namespace detail

// Complete factorization into monic irreducibles over Q(zeta_N), where N is
// the least common level of the coefficients. Factors are sorted canonically.
inline Factorization factor_irreducible(const Poly& a) {
  if (a.is_zero()) throw InputError("factor_irreducible: zero polynomial");
  long level = detail::poly_level(a);
  Factorization out;
  out.unit = a.lc();
  Poly m = a.monic();
  for (const auto& [part, mult] : squarefree_decomposition(m)) {
    for (const Poly& p : detail::factor_c0_squarefree(part, level))
      out.factors.emplace_back(p, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) {
              int c = poly_cmp(x.first, y.first);
              return c != 0 ? c < 0 : x.second < y.second;
            });
  return out;
}

}  // namespace pvkit
