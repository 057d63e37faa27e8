#pragma once

// One-cocycles of a finite group Gamma valued in a linear target over the
// constants, their equivalence, enumeration of H^1, and the two
// constructions tying cocycles to twisted forms.
//
// Equivalence follows the convention a_sigma = c^{-1} * b_sigma * sigma(c)
// (additively for G_a). Cocycle values live over the constants C0 at a
// declared zeta level; matrix values are m x m, scalars are 1 x 1.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvkit/factor.hpp"
#include "pvkit/phi.hpp"

namespace pvkit {

enum class TargetKind { Gm, Mu, Ga, DiagTorus, GLm };

struct GammaTarget {
  TargetKind kind = TargetKind::Gm;
  long m = 1;  // Mu: the order j; DiagTorus / GLm: the matrix size
};

// A finite group together with a target group and a per-element action on
// the target's points. Empty action vectors mean the trivial action.
struct GammaAction {
  FinGroupHopf group;
  GammaTarget target;
  long level = 1;  // cyclotomic level of the constants

  std::vector<long> exponents;    // Gm/Mu/DiagTorus: value -> value^{e_sigma}
  std::vector<CycloNum> scales;   // Ga: value -> c_sigma * value
  std::vector<CMat> conjugators;  // GLm: value -> T v T^{-1}
};

inline long target_dim(const GammaTarget& t) {
  return t.kind == TargetKind::DiagTorus || t.kind == TargetKind::GLm ? t.m
                                                                      : 1;
}

inline CMat target_identity(const GammaTarget& t) {
  std::size_t m = static_cast<std::size_t>(target_dim(t));
  if (t.kind == TargetKind::Ga) return CMat(m, m);
  return CMat::identity(m);
}

inline CMat target_op(const GammaTarget& t, const CMat& a, const CMat& b) {
  return t.kind == TargetKind::Ga ? a + b : a * b;
}

inline CMat target_inv(const GammaTarget& t, const CMat& a) {
  if (t.kind == TargetKind::Ga) return -a;
  return inverse(a);
}

inline bool target_contains(const GammaTarget& t, const CMat& v) {
  std::size_t m = static_cast<std::size_t>(target_dim(t));
  if (v.rows() != m || v.cols() != m) return false;
  switch (t.kind) {
    case TargetKind::Ga:
      return true;
    case TargetKind::GLm:
      return try_inverse(v).has_value();
    case TargetKind::Gm:
      return !v(0, 0).is_zero();
    case TargetKind::Mu: {
      if (v(0, 0).is_zero()) return false;
      return v(0, 0).pow(t.m) == CycloNum(1);
    }
    case TargetKind::DiagTorus: {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          if (i == j && v(i, j).is_zero()) return false;
          if (i != j && !v(i, j).is_zero()) return false;
        }
      return true;
    }
  }
  return false;
}

inline void validate_action(const GammaAction& act) {
  long k = act.group.k;
  auto bad = [](const char* why) { throw InputError(std::string(why)); };
  if (!act.exponents.empty()) {
    if (act.target.kind == TargetKind::Ga || act.target.kind == TargetKind::GLm)
      bad("GammaAction: exponent action needs a multiplicative target");
    if (static_cast<long>(act.exponents.size()) != k)
      bad("GammaAction: one exponent per group element required");
    for (long e : act.exponents)
      if (e != 1 && e != -1) bad("GammaAction: exponents must be +1 or -1");
    if (act.exponents[0] != 1) bad("GammaAction: identity must act trivially");
    for (long s = 0; s < k; ++s)
      for (long t = 0; t < k; ++t)
        if (act.exponents[static_cast<std::size_t>(act.group.op(s, t))] !=
            act.exponents[static_cast<std::size_t>(s)] *
                act.exponents[static_cast<std::size_t>(t)])
          bad("GammaAction: exponent action is not a homomorphism");
  }
  if (!act.scales.empty()) {
    if (act.target.kind != TargetKind::Ga)
      bad("GammaAction: scale action needs the additive target");
    if (static_cast<long>(act.scales.size()) != k)
      bad("GammaAction: one scale per group element required");
    if (!(act.scales[0] == CycloNum(1)))
      bad("GammaAction: identity must act trivially");
    for (const CycloNum& c : act.scales)
      if (c.is_zero()) bad("GammaAction: scales must be invertible");
    for (long s = 0; s < k; ++s)
      for (long t = 0; t < k; ++t)
        if (!(act.scales[static_cast<std::size_t>(act.group.op(s, t))] ==
              act.scales[static_cast<std::size_t>(s)] *
                  act.scales[static_cast<std::size_t>(t)]))
          bad("GammaAction: scale action is not a homomorphism");
  }
  if (!act.conjugators.empty()) {
    if (act.target.kind != TargetKind::GLm)
      bad("GammaAction: conjugation action needs a matrix target");
    if (static_cast<long>(act.conjugators.size()) != k)
      bad("GammaAction: one conjugator per group element required");
    for (const CMat& c : act.conjugators)
      if (!try_inverse(c)) bad("GammaAction: conjugators must be invertible");
  }
}

inline CMat apply_action(const GammaAction& act, long sigma, const CMat& v) {
  if (!act.exponents.empty()) {
    if (act.exponents[static_cast<std::size_t>(sigma)] == 1) return v;
    return target_inv(act.target, v);
  }
  if (!act.scales.empty())
    return act.scales[static_cast<std::size_t>(sigma)] * v;
  if (!act.conjugators.empty()) {
    const CMat& t = act.conjugators[static_cast<std::size_t>(sigma)];
    return t * v * inverse(t);
  }
  return v;
}

struct Cocycle {
  std::vector<CMat> values;  // indexed by the group elements
};

inline Cocycle trivial_cocycle(const GammaAction& act) {
  Cocycle a;
  a.values.assign(static_cast<std::size_t>(act.group.k),
                  target_identity(act.target));
  return a;
}

inline bool is_cocycle(const Cocycle& a, const GammaAction& act) {
  validate_action(act);
  long k = act.group.k;
  if (static_cast<long>(a.values.size()) != k)
    throw InputError("is_cocycle: values must cover the whole group");
  for (const CMat& v : a.values)
    if (!target_contains(act.target, v)) return false;
  if (!(a.values[0] == target_identity(act.target))) return false;
  for (long s = 0; s < k; ++s)
    for (long t = 0; t < k; ++t) {
      CMat want = target_op(
          act.target, a.values[static_cast<std::size_t>(s)],
          apply_action(act, s, a.values[static_cast<std::size_t>(t)]));
      if (!(a.values[static_cast<std::size_t>(act.group.op(s, t))] == want))
        return false;
    }
  return true;
}

enum class Decision { yes, no, undecided };

struct EquivalenceResult {
  Decision decision = Decision::undecided;
  std::optional<CMat> witness;
};

inline bool check_equivalence_witness(const Cocycle& a, const Cocycle& b,
                                      const GammaAction& act, const CMat& c) {
  long k = act.group.k;
  if (act.target.kind == TargetKind::Ga) {
    for (long s = 0; s < k; ++s) {
      CMat want = -c + b.values[static_cast<std::size_t>(s)] +
                  apply_action(act, s, c);
      if (!(a.values[static_cast<std::size_t>(s)] == want)) return false;
    }
    return true;
  }
  CMat cinv = inverse(c);
  for (long s = 0; s < k; ++s) {
    CMat want =
        cinv * b.values[static_cast<std::size_t>(s)] * apply_action(act, s, c);
    if (!(a.values[static_cast<std::size_t>(s)] == want)) return false;
  }
  return true;
}

namespace detail {

// Roots of z^2 = q inside C0 at the level of q, found by factoring.
inline std::vector<CycloNum> square_roots(const CycloNum& q) {
  Poly z2(std::vector<CycloNum>{-q, CycloNum(0), CycloNum(1)});
  std::vector<CycloNum> out;
  for (const auto& [f, e] : factor_irreducible(z2).factors)
    if (f.deg() == 1) out.push_back(-f.coeffs()[0]);
  return out;
}

inline std::vector<CMat> glm_candidates(const Cocycle& a, const Cocycle& b,
                                        const GammaAction& act,
                                        std::size_t bound) {
  std::vector<CMat> pool;
  auto push = [&](const CMat& m) {
    if (!try_inverse(m)) return;
    for (const CMat& p : pool)
      if (p == m) return;
    pool.push_back(m);
  };
  push(target_identity(act.target));
  for (const CMat& v : a.values) push(v);
  for (const CMat& v : b.values) push(v);
  for (const CMat& v : act.conjugators) push(v);
  std::size_t frontier = 0;
  while (pool.size() < bound && frontier < pool.size()) {
    std::size_t upto = pool.size();
    for (std::size_t i = frontier; i < upto && pool.size() < bound; ++i)
      for (std::size_t j = 0; j < upto && pool.size() < bound; ++j)
        push(pool[i] * pool[j]);
    frontier = upto;
  }
  return pool;
}

}  // namespace detail

inline EquivalenceResult are_equivalent(
    const Cocycle& a, const Cocycle& b, const GammaAction& act,
    const std::optional<CMat>& witness = {}) {
  validate_action(act);
  long k = act.group.k;
  if (static_cast<long>(a.values.size()) != k ||
      static_cast<long>(b.values.size()) != k)
    throw InputError("are_equivalent: values must cover the whole group");

  for (long s = 0; s < k; ++s)
    if (!target_contains(act.target, a.values[static_cast<std::size_t>(s)]) ||
        !target_contains(act.target, b.values[static_cast<std::size_t>(s)]))
      throw InputError("are_equivalent: values outside the target");

  if (witness) {
    if (check_equivalence_witness(a, b, act, *witness))
      return {Decision::yes, witness};
    return {Decision::no, {}};
  }

  switch (act.target.kind) {
    case TargetKind::Ga: {
      // a_s - b_s = (scale_s - 1) c: one unknown, k linear conditions.
      CMat lhs(static_cast<std::size_t>(k), 1);
      CMat rhs(static_cast<std::size_t>(k), 1);
      for (long s = 0; s < k; ++s) {
        CycloNum sc = act.scales.empty()
                          ? CycloNum(1)
                          : act.scales[static_cast<std::size_t>(s)];
        lhs(static_cast<std::size_t>(s), 0) = sc - CycloNum(1);
        rhs(static_cast<std::size_t>(s), 0) =
            a.values[static_cast<std::size_t>(s)](0, 0) -
            b.values[static_cast<std::size_t>(s)](0, 0);
      }
      auto sol = solve(lhs, rhs);
      if (!sol) return {Decision::no, {}};
      return {Decision::yes, *sol};
    }
    case TargetKind::Gm:
    case TargetKind::Mu:
    case TargetKind::DiagTorus: {
      long m = target_dim(act.target);
      std::vector<CycloNum> diag(static_cast<std::size_t>(m), CycloNum(1));
      for (long i = 0; i < m; ++i) {
        std::optional<CycloNum> forced;
        for (long s = 0; s < k; ++s) {
          std::size_t si = static_cast<std::size_t>(s);
          std::size_t ii = static_cast<std::size_t>(i);
          CycloNum q = a.values[si](ii, ii) / b.values[si](ii, ii);
          long e = act.exponents.empty() ? 1 : act.exponents[si];
          if (e == 1) {
            if (!(q == CycloNum(1))) return {Decision::no, {}};
          } else {
            // q = c^{-2}: all inverting elements must agree on c^2.
            CycloNum csq = CycloNum(1) / q;
            if (forced && !(*forced == csq)) return {Decision::no, {}};
            forced = csq;
          }
        }
        if (forced) {
          // Root extraction happens in the constants of the action, which
          // may sit at a higher cyclotomic level than the values.
          long lv = std::lcm(forced->level(), act.level);
          auto roots = detail::square_roots(forced->promoted(lv));
          if (roots.empty()) return {Decision::no, {}};
          diag[static_cast<std::size_t>(i)] = roots.front();
        }
      }
      CMat c(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
      for (long i = 0; i < m; ++i)
        c(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            diag[static_cast<std::size_t>(i)];
      if (check_equivalence_witness(a, b, act, c)) return {Decision::yes, c};
      return {Decision::no, {}};
    }
    case TargetKind::GLm: {
      if (check_equivalence_witness(a, b, act, target_identity(act.target)))
        return {Decision::yes, target_identity(act.target)};
      if (act.target.m > 2 || act.group.k > 6)
        return {Decision::undecided, {}};
      for (const CMat& c : detail::glm_candidates(a, b, act, 200))
        if (check_equivalence_witness(a, b, act, c))
          return {Decision::yes, c};
      return {Decision::undecided, {}};
    }
  }
  return {Decision::undecided, {}};
}

namespace detail {

// All homomorphisms Gamma -> Z/modulus, as exponent vectors over the group
// elements, found by assigning generators and propagating.
inline std::vector<std::vector<long>> finite_homs(const FinGroupHopf& g,
                                                  long modulus) {
  long k = g.k;
  std::vector<long> gens;
  {
    std::vector<bool> span(static_cast<std::size_t>(k), false);
    span[0] = true;
    long covered = 1;
    while (covered < k) {
      long pick = -1;
      for (long i = 0; i < k && pick < 0; ++i)
        if (!span[static_cast<std::size_t>(i)]) pick = i;
      gens.push_back(pick);
      bool grew = true;
      span[static_cast<std::size_t>(pick)] = true;
      ++covered;
      while (grew) {
        grew = false;
        for (long a = 0; a < k; ++a)
          for (long b = 0; b < k; ++b)
            if (span[static_cast<std::size_t>(a)] &&
                span[static_cast<std::size_t>(b)]) {
              long c = g.op(a, b);
              if (!span[static_cast<std::size_t>(c)]) {
                span[static_cast<std::size_t>(c)] = true;
                ++covered;
                grew = true;
              }
            }
      }
    }
  }

  std::vector<std::vector<long>> out;
  std::vector<long> assign(gens.size(), 0);
  auto attempt = [&]() {
    std::vector<long> f(static_cast<std::size_t>(k), -1);
    f[0] = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      f[static_cast<std::size_t>(gens[i])] = assign[i];
    bool grew = true;
    while (grew) {
      grew = false;
      for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b) {
          if (f[static_cast<std::size_t>(a)] < 0 ||
              f[static_cast<std::size_t>(b)] < 0)
            continue;
          long c = g.op(a, b);
          long v = (f[static_cast<std::size_t>(a)] +
                    f[static_cast<std::size_t>(b)]) %
                   modulus;
          if (f[static_cast<std::size_t>(c)] < 0) {
            f[static_cast<std::size_t>(c)] = v;
            grew = true;
          } else if (f[static_cast<std::size_t>(c)] != v) {
            return;
          }
        }
    }
    for (long v : f)
      if (v < 0) return;
    out.push_back(std::move(f));
  };
  while (true) {
    attempt();
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == modulus) {
      assign[i] = 0;
      ++i;
    }
    if (i == assign.size()) break;
  }
  return out;
}

inline int cocycle_cmp(const Cocycle& a, const Cocycle& b) {
  for (std::size_t s = 0; s < a.values.size(); ++s)
    for (std::size_t i = 0; i < a.values[s].rows(); ++i)
      for (std::size_t j = 0; j < a.values[s].cols(); ++j) {
        int c = CycloNum::cmp(a.values[s](i, j), b.values[s](i, j));
        if (c != 0) return c;
      }
  return 0;
}

}  // namespace detail

// Exhaustive H^1 for the supported targets. Multiplicative targets require
// the trivial action (finite homomorphism count); the additive target is
// handled by the exact vanishing argument.
inline std::vector<Cocycle> enumerate_h1(const GammaAction& act) {
  validate_action(act);
  long k = act.group.k;
  if (k > 12) throw InputError("enumerate_h1: group order exceeds 12");
  if (act.target.kind == TargetKind::GLm)
    throw InputError("unsupported target");
  if ((act.target.kind == TargetKind::Gm ||
       act.target.kind == TargetKind::Mu ||
       act.target.kind == TargetKind::DiagTorus) &&
      !act.exponents.empty()) {
    for (long e : act.exponents)
      if (e != 1) throw InputError("unsupported target");
  }

  if (act.target.kind == TargetKind::Ga) {
    // Every additive cocycle over the constants is a coboundary; return the
    // zero class after confirming it satisfies the condition.
    Cocycle zero;
    zero.values.assign(static_cast<std::size_t>(k), CMat(1, 1));
    if (!is_cocycle(zero, act))
      throw Error("enumerate_h1: additive identity is not a cocycle");
    return {zero};
  }

  long r = roots_of_unity_order(act.level);
  long modulus = r;
  long stretch = 1;
  if (act.target.kind == TargetKind::Mu) {
    long g = std::gcd(act.target.m, r);
    modulus = g;
    stretch = r / g;
  }
  CycloNum gen = root_of_unity(act.level, r);

  std::vector<std::vector<std::vector<long>>> per_coord;
  long m = target_dim(act.target);
  auto homs = detail::finite_homs(act.group, modulus);
  for (long i = 0; i < m; ++i) per_coord.push_back(homs);

  std::vector<Cocycle> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  while (true) {
    Cocycle a;
    for (long s = 0; s < k; ++s) {
      CMat v = CMat::identity(static_cast<std::size_t>(m));
      for (long i = 0; i < m; ++i) {
        long e = per_coord[static_cast<std::size_t>(i)]
                          [pick[static_cast<std::size_t>(i)]]
                          [static_cast<std::size_t>(s)];
        v(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            gen.pow(e * stretch);
      }
      a.values.push_back(std::move(v));
    }
    out.push_back(std::move(a));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == per_coord[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }

  std::sort(out.begin(), out.end(), [](const Cocycle& x, const Cocycle& y) {
    return detail::cocycle_cmp(x, y) < 0;
  });
  return out;
}

// A twisted form: N over F that becomes isomorphic to M after extension
// along S, together with the isomorphism realizing it.
struct TwistedFormDesc {
  PhiObject base;     // M
  PhiObject twisted;  // N
  FinHopfGalois s;
  FMat iso;  // Phi_S-isomorphism N (x) S -> M (x) S
};

inline void validate_twisted_form(const TwistedFormDesc& tf) {
  ScalarExtension ns = extend_scalars(tf.twisted, tf.s);
  ScalarExtension ms = extend_scalars(tf.base, tf.s);
  if (!try_inverse(tf.iso))
    throw InputError("TwistedFormDesc: iso is not invertible");
  if (!is_phi_ext_morphism(tf.iso, ns, ms))
    throw InputError("TwistedFormDesc: iso is not a Phi morphism over S");
}

namespace detail {

// Reads a matrix of the form C (x) I_k with constant C off an operator on
// M (x) S; empty result means the operator does not have that shape.
inline std::optional<CMat> constant_block_form(const FMat& a, long d, long k) {
  CMat c(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      RatFunc v = a(static_cast<std::size_t>(i * k), static_cast<std::size_t>(j * k));
      if (!v.is_zero() && !v.is_constant()) return {};
      c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          v.is_zero() ? CycloNum(0) : v.constant_value();
    }
  FMat rebuilt(static_cast<std::size_t>(d * k), static_cast<std::size_t>(d * k));
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      const CycloNum& cv = c(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (cv.is_zero()) continue;
      for (long s = 0; s < k; ++s)
        rebuilt(static_cast<std::size_t>(i * k + s),
                static_cast<std::size_t>(j * k + s)) = RatFunc(cv);
    }
  if (!(rebuilt == a)) return {};
  return c;
}

}  // namespace detail

// Construction F: a_sigma = phi o sigma o phi^{-1} o sigma^{-1} on M (x) S,
// with sigma acting through the coaction on each side.
inline Cocycle construction_F(const TwistedFormDesc& tf,
                              const GammaAction& act) {
  validate_action(act);
  if (act.target.kind == TargetKind::Ga)
    throw InputError("unsupported target");
  if (act.group.k != tf.s.gamma.k)
    throw InputError("construction_F: group does not match the extension");
  validate_twisted_form(tf);

  ScalarExtension ns = extend_scalars(tf.twisted, tf.s);
  ScalarExtension ms = extend_scalars(tf.base, tf.s);
  std::vector<FMat> gn = ext_gamma_action(ns);
  std::vector<FMat> gm = ext_gamma_action(ms);
  FMat phi_inv = inverse(tf.iso);

  long d = tf.base.d, k = tf.s.k;
  Cocycle a;
  for (long s = 0; s < act.group.k; ++s) {
    FMat op = tf.iso * gn[static_cast<std::size_t>(s)] * phi_inv *
              inverse(gm[static_cast<std::size_t>(s)]);
    auto c = detail::constant_block_form(op, d, k);
    if (!c) throw Error("not a cocycle");
    if (target_dim(act.target) == 1) {
      // scalar extraction: the block must itself be scalar
      CMat scalar(1, 1);
      scalar(0, 0) = (*c)(0, 0);
      CMat diag(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      for (long i = 0; i < d; ++i)
        diag(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            (*c)(0, 0);
      if (!(*c == diag)) throw Error("not a cocycle");
      a.values.push_back(std::move(scalar));
    } else {
      if (target_dim(act.target) != d) throw Error("not a cocycle");
      a.values.push_back(std::move(*c));
    }
  }
  if (!is_cocycle(a, act)) throw Error("not a cocycle");
  return a;
}

// The fixed-point basis of {a_sigma o sigma} on an ambient extension.
inline FMat twist_fixed_basis(const Cocycle& a, const GammaAction& act,
                              const ScalarExtension& ambient) {
  long d = ambient.base.d, k = ambient.s.k;
  long vd = target_dim(act.target);
  if (act.group.k != ambient.s.gamma.k)
    throw InputError("construction_G: group does not match the extension");
  if (vd != 1 && vd != d)
    throw InputError("construction_G: target does not act on the ambient");
  std::vector<FMat> gs = ext_gamma_action(ambient);
  std::size_t n = static_cast<std::size_t>(d * k);
  if (act.group.k == 1) return FMat::identity(n);
  std::vector<FMat> blocks;
  for (long s = 1; s < act.group.k; ++s) {
    FMat val(n, n);
    const CMat& v = a.values[static_cast<std::size_t>(s)];
    if (vd == 1) {
      RatFunc lambda{v(0, 0)};
      val = lambda * FMat::identity(n);
    } else {
      FMat vf(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
          vf(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              RatFunc(v(static_cast<std::size_t>(i),
                        static_cast<std::size_t>(j)));
      val = kron(vf, FMat::identity(static_cast<std::size_t>(k)));
    }
    blocks.push_back(val * gs[static_cast<std::size_t>(s)] -
                     FMat::identity(n));
  }
  std::size_t rows = 0;
  for (const FMat& b : blocks) rows += b.rows();
  FMat sys(rows, n);
  std::size_t at = 0;
  for (const FMat& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) sys(at + i, j) = b(i, j);
    at += b.rows();
  }
  return kernel_basis(sys);
}

// Construction G: the fixed points of a_sigma o sigma inside the ambient
// extension, with the restricted Phi-structure.
inline PhiObject construction_G(const Cocycle& a, const GammaAction& act,
                                const ScalarExtension& ambient) {
  validate_action(act);
  if (!is_cocycle(a, act))
    throw InputError("construction_G: input is not a cocycle");
  FMat w = twist_fixed_basis(a, act, ambient);
  if (static_cast<long>(w.cols()) != ambient.base.d)
    throw Error("dimension defect");
  return restrict_extension(ambient, w);
}

// Packages the output of construction_G as a twisted form, using the
// multiplication map as the canonical isomorphism over S.
inline TwistedFormDesc twisted_form_from_cocycle(const Cocycle& a,
                                                 const GammaAction& act,
                                                 const ScalarExtension& ambient) {
  validate_action(act);
  if (!is_cocycle(a, act))
    throw InputError("twisted_form_from_cocycle: input is not a cocycle");
  FMat w = twist_fixed_basis(a, act, ambient);
  if (static_cast<long>(w.cols()) != ambient.base.d)
    throw Error("dimension defect");
  TwistedFormDesc tf;
  tf.base = ambient.base;
  tf.twisted = restrict_extension(ambient, w);
  tf.s = ambient.s;
  tf.iso = descent_mult_map(ambient, w);
  return tf;
}

}  // namespace pvkit
