#pragma once

// Differential modules presented as matrix systems y' = A y, gauge
// transformations between them, and the standard module constructions.

#include "pvkit/matrix.hpp"

namespace pvkit {

struct LinSys {
  FMat A;

  LinSys() = default;
  explicit LinSys(FMat a) : A(std::move(a)) {
    if (!A.is_square()) throw InputError("LinSys: matrix must be square");
  }
  explicit LinSys(const RatFunc& a) : A(1, 1, {a}) {}

  std::size_t n() const { return A.rows(); }
};

struct GaugeWitness {
  FMat P;
  FMat Pinv;

  explicit GaugeWitness(FMat p) : P(std::move(p)) {
    if (!P.is_square()) throw InputError("GaugeWitness: matrix must be square");
    auto inv = try_inverse(P);
    if (!inv) throw InputError("GaugeWitness: matrix is singular");
    Pinv = std::move(*inv);
  }
  GaugeWitness(FMat p, FMat pinv) : P(std::move(p)), Pinv(std::move(pinv)) {
    if (!P.is_square() || P.rows() != Pinv.rows() || !Pinv.is_square())
      throw InputError("GaugeWitness: shape mismatch");
    if (!(P * Pinv == FMat::identity(P.rows())))
      throw InputError("GaugeWitness: Pinv is not the inverse of P");
  }

  std::size_t n() const { return P.rows(); }

  GaugeWitness inverse_witness() const { return GaugeWitness(Pinv, P); }
};

inline LinSys gauge(const LinSys& sys, const GaugeWitness& w) {
  if (sys.n() != w.n()) throw InputError("gauge: dimension mismatch");
  return LinSys(derive(w.P) * w.Pinv + w.P * sys.A * w.Pinv);
}

inline bool is_gauge_witness(const LinSys& a, const LinSys& b,
                             const GaugeWitness& w) {
  if (a.n() != b.n() || a.n() != w.n())
    throw InputError("is_gauge_witness: dimension mismatch");
  return gauge(a, w).A == b.A;
}

inline LinSys tensor(const LinSys& a, const LinSys& b) {
  FMat ia = FMat::identity(a.n()), ib = FMat::identity(b.n());
  return LinSys(kron(a.A, ib) + kron(ia, b.A));
}

inline LinSys dual(const LinSys& a) { return LinSys(-a.A.transpose()); }

inline LinSys direct_sum(const LinSys& a, const LinSys& b) {
  FMat m(a.n() + b.n(), a.n() + b.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) m(i, j) = a.A(i, j);
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j)
      m(a.n() + i, a.n() + j) = b.A(i, j);
  return LinSys(m);
}

}  // namespace pvkit
