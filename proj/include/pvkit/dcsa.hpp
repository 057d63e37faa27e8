#pragma once

// Differential central simple algebras presented on M_n(F): every such
// derivation is delta_P(x) = x' + Px - xP for a traceless P, and
// isomorphisms are conjugations x -> u x u^{-1}. This header provides the
// derivation calculus, witness checking, the closed-form PGL gauge
// relation, the vectorized adjoint system, and splitting degrees against
// the dim PGL_n = n^2 - 1 bound.
//
// Vectorization is row-major throughout: e_{ij} sits at slot i*n + j, so
// kron(A, B) . vec(x) = vec(A x B^T), the adjoint matrix of the condition
// delta_P(x) = 0 is kron(I, P^T) - kron(P, I), and conjugation by u acts
// on vectors as kron(u, (u^{-1})^T).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvkit/torsor.hpp"

namespace pvkit {

struct DeltaCSA {
  long n = 0;
  FMat P;

  DeltaCSA() = default;
  explicit DeltaCSA(FMat p) : P(std::move(p)) {
    if (!P.is_square()) throw InputError("DeltaCSA: matrix must be square");
    if (!P.trace().is_zero())
      throw InputError("DeltaCSA: matrix must be traceless");
    n = static_cast<long>(P.rows());
  }
};

inline FMat apply_delta(const DeltaCSA& a, const FMat& x) {
  if (x.rows() != a.P.rows() || x.cols() != a.P.cols())
    throw InputError("apply_delta: dimension mismatch");
  return derive(x) + a.P * x - x * a.P;
}

inline DeltaCSA make_traceless(const FMat& p_raw) {
  if (!p_raw.is_square())
    throw InputError("make_traceless: matrix must be square");
  std::size_t n = p_raw.rows();
  RatFunc shift = p_raw.trace() / RatFunc(static_cast<long>(n));
  return DeltaCSA(p_raw - shift * FMat::identity(n));
}

// The closed-form gauge of P by the conjugation witness u. With
// Q = pgl_gauge(P, u) the conjugation x -> u x u^{-1} intertwines
// delta_Q into delta_P: delta_P(u x u^{-1}) = u . delta_Q(x) . u^{-1}.
// Witnesses compose on the right: if u relates P to Q and v relates
// Q to R, then u.v relates P to R, i.e.
// pgl_gauge(pgl_gauge(P, u), v) = pgl_gauge(P, u.v).
inline DeltaCSA pgl_gauge(const DeltaCSA& a, const GaugeWitness& u) {
  if (u.n() != static_cast<std::size_t>(a.n))
    throw InputError("pgl_gauge: dimension mismatch");
  std::size_t n = u.n();
  FMat core = u.Pinv * derive(u.P) + u.Pinv * a.P * u.P;
  RatFunc shift = core.trace() / RatFunc(static_cast<long>(n));
  return DeltaCSA(core - shift * FMat::identity(n));
}

// True iff conjugation by u carries delta_B into delta_A, checked on the
// n^2 basis matrices e_{ij}. Equivalent to B.P == pgl_gauge(A, u).P; the
// test suite validates that closed form against this oracle.
inline bool iso_witness_check(const DeltaCSA& a, const DeltaCSA& b,
                              const GaugeWitness& u) {
  if (a.n != b.n || u.n() != static_cast<std::size_t>(a.n))
    throw InputError("iso_witness_check: dimension mismatch");
  std::size_t n = u.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FMat e(n, n);
      e(i, j) = RatFunc(1);
      FMat lhs = apply_delta(a, u.P * e * u.Pinv);
      FMat rhs = u.P * apply_delta(b, e) * u.Pinv;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

struct AdjointSys {
  LinSys sys;

  std::size_t n() const { return sys.n(); }
};

// The n^2-dimensional system vec(x)' = M . vec(x) equivalent to
// delta_P(x) = 0, i.e. the Kronecker form of x -> xP - Px.
inline AdjointSys adjoint_system(const DeltaCSA& a) {
  std::size_t n = a.P.rows();
  FMat id = FMat::identity(n);
  return AdjointSys{LinSys(kron(id, a.P.transpose()) - kron(a.P, id))};
}

// Conjugation by u on vectorized matrices: vec(u x u^{-1}).
inline GaugeWitness ad_witness(const GaugeWitness& u) {
  return GaugeWitness(kron(u.P, u.Pinv.transpose()),
                      kron(u.Pinv, u.P.transpose()));
}

// The adjoint presentation of the torsor attached to a delta-CSA. An
// isomorphism witness u between algebras transports to the torsor
// witness ad_witness(u) between the corresponding adjoint systems.
inline DiffTorsorGLn to_pgl_torsor(const DeltaCSA& a) {
  return from_module(adjoint_system(a).sys);
}

inline SplitReport splitting_degree(const DeltaCSA& a) {
  SplitReport rep;
  if (is_diagonal(a.P)) {
    std::size_t n = a.P.rows();
    std::vector<RatFunc> rates;
    rates.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rates.push_back(a.P(j, j) - a.P(i, i));
    DiagGroup g = diag_group(rates);
    rep.degree = g.dimension();
    rep.is_bound = false;
    rep.minimal_field_note =
        "diagonal presentation: exact splitting degree equals the torus "
        "rank of " +
        g.name();
    rep.group = std::move(g);
    return rep;
  }
  rep.degree = a.n * a.n - 1;
  rep.is_bound = true;
  rep.minimal_field_note =
      "non-diagonal presentation: degree bounded by dim PGL_n = n^2 - 1; a "
      "minimal splitting field exists but is not constructed here";
  return rep;
}

}  // namespace pvkit
