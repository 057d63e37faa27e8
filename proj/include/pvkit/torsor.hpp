#pragma once

// Differential GL_n-torsors presented by their derivation matrix, the
// module/torsor correspondence, and splitting-degree reports.
//
// A torsor here is the data delta_A(X) = A*X on the coordinate functions of
// GL_n. The coordinate ring itself is never materialized: the matrix A is a
// faithful presentation, and every operation below works on it directly.

#include <optional>
#include <string>

#include "pvkit/classify.hpp"
#include "pvkit/linsys.hpp"

namespace pvkit {

struct DiffTorsorGLn {
  FMat A;

  DiffTorsorGLn() = default;
  explicit DiffTorsorGLn(FMat a) : A(std::move(a)) {
    if (!A.is_square())
      throw InputError("DiffTorsorGLn: matrix must be square");
  }

  std::size_t n() const { return A.rows(); }
};

inline DiffTorsorGLn from_module(const LinSys& m) {
  return DiffTorsorGLn(m.A);
}

inline LinSys to_module(const DiffTorsorGLn& y) { return LinSys(y.A); }

inline bool torsor_iso_check(const DiffTorsorGLn& y, const DiffTorsorGLn& z,
                             const GaugeWitness& p) {
  if (y.n() != z.n() || y.n() != p.n())
    throw InputError("torsor_iso_check: dimension mismatch");
  return is_gauge_witness(to_module(y), to_module(z), p);
}

enum class TriState { yes, no, undecided };

inline bool is_diagonal(const FMat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && !a(i, j).is_zero()) return false;
  return true;
}

// Without a witness the question is decided only where we have an exact
// classifier: rank 1 (rational solution search) and diagonal systems
// (lattice of multiplicative relations).
inline TriState is_trivial_torsor(
    const DiffTorsorGLn& y, const std::optional<GaugeWitness>& p = {}) {
  if (p) {
    if (p->n() != y.n())
      throw InputError("is_trivial_torsor: dimension mismatch");
    return gauge(to_module(y), *p).A.is_zero() ? TriState::yes : TriState::no;
  }
  if (y.A.is_zero()) return TriState::yes;
  if (y.n() == 1) {
    return rational_solution_rank1(y.A(0, 0)) ? TriState::yes : TriState::no;
  }
  if (is_diagonal(y.A)) {
    std::vector<RatFunc> diag;
    diag.reserve(y.n());
    for (std::size_t i = 0; i < y.n(); ++i) diag.push_back(y.A(i, i));
    return diag_group(diag).is_trivial() ? TriState::yes : TriState::no;
  }
  return TriState::undecided;
}

struct SplitReport {
  std::optional<DiagGroup> group;
  long degree = 0;
  bool is_bound = false;
  std::string minimal_field_note;
};

inline SplitReport splitting_report(const DiffTorsorGLn& y) {
  SplitReport rep;
  if (is_diagonal(y.A)) {
    std::vector<RatFunc> diag;
    diag.reserve(y.n());
    for (std::size_t i = 0; i < y.n(); ++i) diag.push_back(y.A(i, i));
    DiagGroup g = diag_group(diag);
    rep.degree = g.dimension();
    rep.is_bound = false;
    rep.minimal_field_note =
        "minimal splitting field generated by solutions of the diagonal "
        "system; degree equals the torus rank of " +
        g.name();
    rep.group = std::move(g);
    return rep;
  }
  rep.degree = static_cast<long>(y.n() * y.n());
  rep.is_bound = true;
  rep.minimal_field_note =
      "non-diagonal system: degree bounded by dim GL_n = n^2; a minimal "
      "splitting field exists but is not constructed here";
  return rep;
}

}  // namespace pvkit
