#pragma once

// Integer matrix normal forms: column-style Hermite form, Smith form, and
// the lattice kernels built from them. Matrices are Matrix<Integer>; only
// ring operations from the container are used here.

#include "pvkit/matrix.hpp"

namespace pvkit {

using IMat = Matrix<Integer>;
using QMat = Matrix<Rational>;

namespace detail {

inline void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s,
                 Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

inline void col_axpy(IMat& m, std::size_t dst, std::size_t src,
                     const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) = m(i, dst) + f * m(i, src);
}

inline void col_swap(IMat& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

inline void col_negate(IMat& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// Unimodular transform on columns (c1, c2) of both m and u:
// new c1 = s*c1 + t*c2, new c2 = -q2*c1 + q1*c2.
inline void col_combine(IMat& m, IMat& u, std::size_t c1, std::size_t c2,
                        const Integer& s, const Integer& t, const Integer& q1,
                        const Integer& q2) {
  for (IMat* mat : {&m, &u}) {
    for (std::size_t i = 0; i < mat->rows(); ++i) {
      Integer v1 = (*mat)(i, c1), v2 = (*mat)(i, c2);
      (*mat)(i, c1) = s * v1 + t * v2;
      (*mat)(i, c2) = q1 * v2 - q2 * v1;
    }
  }
}

}  // namespace detail

struct HermiteForm {
  IMat h;                          // h = a * u, column Hermite form
  IMat u;                          // unimodular
  std::vector<std::size_t> pivot_rows;  // pivot row of each nonzero column
};

// Column-style Hermite normal form: pivot columns first (one per pivot row,
// pivot rows strictly increasing), pivot entries positive, entries left of a
// pivot reduced into [0, pivot). Zero columns come last.
inline HermiteForm hermite_form(const IMat& a) {
  HermiteForm out{a, IMat::identity(a.cols()), {}};
  IMat& h = out.h;
  IMat& u = out.u;
  std::size_t c = 0;
  for (std::size_t row = 0; row < a.rows() && c < a.cols(); ++row) {
    for (std::size_t j = c + 1; j < a.cols(); ++j) {
      if (h(row, j) == 0) continue;
      if (h(row, c) == 0) {
        detail::col_swap(h, c, j);
        detail::col_swap(u, c, j);
        continue;
      }
      Integer g, s, t;
      detail::xgcd(h(row, c), h(row, j), g, s, t);
      Integer q1 = h(row, c) / g, q2 = h(row, j) / g;
      detail::col_combine(h, u, c, j, s, t, q1, q2);
    }
    if (h(row, c) == 0) continue;
    if (h(row, c) < 0) {
      detail::col_negate(h, c);
      detail::col_negate(u, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), h(row, c).get_mpz_t());
      if (q == 0) continue;
      detail::col_axpy(h, j, c, -q);
      detail::col_axpy(u, j, c, -q);
    }
    out.pivot_rows.push_back(row);
    ++c;
  }
  return out;
}

// Saturated integer kernel of a rational matrix: columns form a Z-basis of
// {v in Z^n : a v = 0}. Row scaling clears denominators without changing
// the kernel; unimodularity of the Hermite transform gives saturation.
inline IMat integer_kernel(const QMat& a) {
  IMat z(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j)
      l = int_lcm(l, a(i, j).get_den());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational scaled = a(i, j) * Rational(l);
      z(i, j) = scaled.get_num();
    }
  }
  HermiteForm hf = hermite_form(z);
  std::size_t r = hf.pivot_rows.size();
  IMat basis(a.cols(), a.cols() - r);
  for (std::size_t j = r; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) basis(i, j - r) = hf.u(i, j);
  return basis;
}

struct SmithForm {
  IMat d;  // u * a * v = d, diagonal, d(0,0) | d(1,1) | ...
  IMat u;  // unimodular, rows x rows
  IMat v;  // unimodular, cols x cols
  std::vector<Integer> invariants;  // nonzero diagonal entries
};

inline SmithForm smith_form(const IMat& a) {
  SmithForm out{a, IMat::identity(a.rows()), IMat::identity(a.cols()), {}};
  IMat& d = out.d;
  IMat& u = out.u;
  IMat& v = out.v;
  std::size_t n = d.rows(), m = d.cols();

  auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < m; ++j) d(dst, j) = d(dst, j) + f * d(src, j);
    for (std::size_t j = 0; j < n; ++j) u(dst, j) = u(dst, j) + f * u(src, j);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < m; ++j) std::swap(d(x, j), d(y, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(u(x, j), u(y, j));
  };
  auto row_combine = [&](std::size_t r1, std::size_t r2, const Integer& s,
                         const Integer& t, const Integer& q1,
                         const Integer& q2) {
    for (std::size_t j = 0; j < m; ++j) {
      Integer a1 = d(r1, j), a2 = d(r2, j);
      d(r1, j) = s * a1 + t * a2;
      d(r2, j) = q1 * a2 - q2 * a1;
    }
    for (std::size_t j = 0; j < n; ++j) {
      Integer a1 = u(r1, j), a2 = u(r2, j);
      u(r1, j) = s * a1 + t * a2;
      u(r2, j) = q1 * a2 - q2 * a1;
    }
  };

  std::size_t t = 0;
  while (t < n && t < m) {
    // Find a nonzero pivot in the trailing submatrix.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < n && !found; ++i)
      for (std::size_t j = t; j < m && !found; ++j)
        if (!(d(i, j) == 0)) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) {
      detail::col_swap(d, pj, t);
      detail::col_swap(v, pj, t);
    }

    for (;;) {
      // Clear column t below the pivot. Entries divisible by the pivot are
      // eliminated in place; the unimodular gcd combine is reserved for the
      // non-divisible case, where it strictly shrinks |d(t,t)| and so can
      // only happen finitely often.
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        if (d(i, t) % d(t, t) == 0) {
          row_axpy(i, t, -(d(i, t) / d(t, t)));
          continue;
        }
        Integer g, s, tt;
        detail::xgcd(d(t, t), d(i, t), g, s, tt);
        row_combine(t, i, s, tt, d(t, t) / g, d(i, t) / g);
      }
      // Clear row t right of the pivot, in the same two regimes.
      bool pivot_changed = false;
      for (std::size_t j = t + 1; j < m; ++j) {
        if (d(t, j) == 0) continue;
        if (d(t, j) % d(t, t) == 0) {
          Integer f = -(d(t, j) / d(t, t));
          detail::col_axpy(d, j, t, f);
          detail::col_axpy(v, j, t, f);
          continue;
        }
        Integer g, s, tt;
        detail::xgcd(d(t, t), d(t, j), g, s, tt);
        detail::col_combine(d, v, t, j, s, tt, d(t, t) / g, d(t, j) / g);
        pivot_changed = true;
      }
      if (!pivot_changed) {
        bool col_clean = true;
        for (std::size_t i = t + 1; i < n; ++i)
          if (!(d(i, t) == 0)) col_clean = false;
        if (col_clean) break;
      }
    }

    if (d(t, t) < 0) {
      detail::col_negate(d, t);
      detail::col_negate(v, t);
    }
    // Enforce divisibility: fold any non-multiple into column t and redo.
    bool redo = false;
    for (std::size_t i = t + 1; i < n && !redo; ++i)
      for (std::size_t j = t + 1; j < m && !redo; ++j)
        if (!(d(i, j) % d(t, t) == 0)) {
          detail::col_axpy(d, t, j, Integer(1));
          detail::col_axpy(v, t, j, Integer(1));
          redo = true;
        }
    if (!redo) ++t;
  }
  for (std::size_t i = 0; i < t; ++i) out.invariants.push_back(d(i, i));
  return out;
}

// Z-basis of {y in Z^m : c y = 0 (mod modulus)} for an integer matrix c.
// Always full rank m (contains modulus * Z^m).
inline IMat congruence_kernel(const IMat& c, const Integer& modulus) {
  if (modulus <= 0) throw Error("congruence_kernel: modulus must be positive");
  std::size_t m = c.cols();
  if (modulus == 1) return IMat::identity(m);
  SmithForm sf = smith_form(c);
  // c y in modulus*Z^k  <=>  for z = v^{-1} y: d_i z_i = 0 mod modulus.
  IMat scale(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Integer di = i < sf.invariants.size() ? sf.invariants[i] : Integer(0);
    scale(i, i) = di == 0 ? Integer(1) : modulus / int_gcd(di, modulus);
  }
  return sf.v * scale;
}

}  // namespace pvkit
