#pragma once

// Partial fraction decomposition over Q(zeta_N) with respect to the monic
// irreducible factorization of the denominator, and the classifier for
// logarithmic derivatives f = g'/g built on top of it: f is a logarithmic
// derivative iff its polynomial part vanishes, every pole is simple, and
// every residue numerator is an integer multiple of p'.

#include <optional>

#include "pvkit/ratfunc.hpp"

namespace pvkit {

struct PartialFractions {
  struct Term {
    Poly p;  // monic irreducible
    int e;   // pole order, >= 1
    Poly a;  // numerator, deg a < deg p, nonzero
  };
  Poly polypart;
  std::vector<Term> terms;  // sorted by (p, e)
};

inline RatFunc reassemble(const PartialFractions& pf) {
  RatFunc acc(pf.polypart);
  for (const auto& t : pf.terms)
    acc = acc + RatFunc(t.a, t.p.pow(t.e));
  return acc;
}

namespace detail {

// Bezout coefficients: u*a + v*b = 1 for coprime a, b.
inline std::pair<Poly, Poly> poly_bezout(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0(CycloNum(1)), s1;
  Poly t0, t1(CycloNum(1));
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.deg() != 0) throw Error("poly_bezout: inputs not coprime");
  CycloNum inv = CycloNum(1) / r0.constant_value();
  return {inv * s0, inv * t0};
}

}  // namespace detail

inline constexpr long kMaxDenominatorDegree = 12;

inline PartialFractions partial_fractions(const RatFunc& f) {
  if (f.den().deg() > kMaxDenominatorDegree)
    throw InputError("partial_fractions: denominator degree exceeds 12");
  PartialFractions out;
  if (f.is_zero()) {
    return out;
  }
  auto [q, r] = poly_divmod(f.num(), f.den());
  out.polypart = q;
  if (r.is_zero()) return out;

  Factorization fac = factor_irreducible(f.den());
  // Split r / den into components r_i / p_i^e_i by iterated Bezout.
  Poly rem = r;
  Poly den_rest = f.den();
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    const auto& [p, e] = fac.factors[i];
    Poly pe = p.pow(e);
    Poly local;
    if (i + 1 == fac.factors.size()) {
      local = rem;  // rem / pe is the final component
    } else {
      den_rest = poly_divmod(den_rest, pe).first;
      auto [u, v] = detail::poly_bezout(pe, den_rest);
      // rem / (pe * rest) = rem*v / pe + rem*u / rest
      local = poly_mod(rem * v, pe);
      rem = poly_mod(rem * u, den_rest);
    }
    // p-adic digits of local / p^e.
    Poly c = local;
    for (int j = 0; j < e && !c.is_zero(); ++j) {
      auto [hi, digit] = poly_divmod(c, p);
      if (!digit.is_zero())
        out.terms.push_back({p, e - j, digit});
      c = std::move(hi);
    }
    if (!c.is_zero())
      throw Error("partial_fractions: internal digit overflow");
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const PartialFractions::Term& a, const PartialFractions::Term& b) {
              int c = poly_cmp(a.p, b.p);
              return c != 0 ? c < 0 : a.e < b.e;
            });
  return out;
}

struct LogDerivWitness {
  // f = sum n_i * p_i'/p_i, i.e. f = g'/g for g = prod p_i^(n_i).
  std::vector<std::pair<Poly, Integer>> factors;
};

// Reconstructs g'/g from a witness, for oracle checks.
inline RatFunc witness_log_derivative(const LogDerivWitness& w) {
  RatFunc acc;
  for (const auto& [p, n] : w.factors)
    acc = acc + RatFunc(CycloNum(Rational(n))) * RatFunc(p.derivative(), p);
  return acc;
}

inline std::optional<LogDerivWitness> is_log_derivative(const RatFunc& f) {
  PartialFractions pf = partial_fractions(f);
  if (!pf.polypart.is_zero()) return std::nullopt;
  LogDerivWitness w;
  for (const auto& t : pf.terms) {
    if (t.e != 1) return std::nullopt;
    // Need a = n * p' with n a rational integer.
    long dp = t.p.deg();
    CycloNum ratio = t.a.coeff(static_cast<std::size_t>(dp - 1)) / CycloNum(dp);
    if (!(t.a == ratio * t.p.derivative())) return std::nullopt;
    if (!ratio.is_rational()) return std::nullopt;
    const Rational& q = ratio.rational_value();
    if (!rational_is_integer(q)) return std::nullopt;
    w.factors.emplace_back(t.p, q.get_num());
  }
  return w;
}

struct LogScalableResult {
  Integer k;                 // minimal k >= 1 with k*f a logarithmic derivative
  LogDerivWitness witness;   // witness for k*f
};

inline std::optional<LogScalableResult> log_scalable(const RatFunc& f) {
  PartialFractions pf = partial_fractions(f);
  if (!pf.polypart.is_zero()) return std::nullopt;
  std::vector<std::pair<Poly, Rational>> ratios;
  for (const auto& t : pf.terms) {
    if (t.e != 1) return std::nullopt;
    long dp = t.p.deg();
    CycloNum ratio = t.a.coeff(static_cast<std::size_t>(dp - 1)) / CycloNum(dp);
    if (!(t.a == ratio * t.p.derivative())) return std::nullopt;
    if (!ratio.is_rational()) return std::nullopt;
    ratios.emplace_back(t.p, ratio.rational_value());
  }
  LogScalableResult out;
  out.k = 1;
  for (const auto& [p, q] : ratios) out.k = int_lcm(out.k, q.get_den());
  for (const auto& [p, q] : ratios) {
    Rational scaled = q * Rational(out.k);
    out.witness.factors.emplace_back(p, scaled.get_num());
  }
  return out;
}

}  // namespace pvkit
