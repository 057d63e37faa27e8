#pragma once

// Galois-group classification for rank-1 and diagonal systems. The group of
// a diagonal system diag(a_1..a_n) is the diagonalizable group cut out by
// the character lattice L = {m in Z^n : sum m_i a_i is a logarithmic
// derivative}; its character group is Z^n/L.

#include <map>
#include <numeric>
#include <sstream>

#include "pvkit/intmat.hpp"
#include "pvkit/linsys.hpp"
#include "pvkit/partfrac.hpp"

namespace pvkit {

struct DiagGroup {
  long torus_rank = 0;
  std::vector<Integer> finite_factors;  // invariant factors, each >= 2

  long dimension() const { return torus_rank; }
  bool is_trivial() const { return torus_rank == 0 && finite_factors.empty(); }

  std::string name() const {
    if (is_trivial()) return "trivial";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < torus_rank; ++i) {
      if (!first) os << " x ";
      os << "G_m";
      first = false;
    }
    for (const auto& d : finite_factors) {
      if (!first) os << " x ";
      os << "mu(" << d.get_str() << ")";
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const DiagGroup& a, const DiagGroup& b) {
    return a.torus_rank == b.torus_rank && a.finite_factors == b.finite_factors;
  }
};

struct CharLattice {
  std::size_t n = 0;
  std::vector<std::vector<Integer>> basis;  // columns of the Hermite form

  std::size_t lattice_rank() const { return basis.size(); }
};

namespace detail {

// Flattens a C0-linear constraint row (one CycloNum per input) into phi(L)
// rational rows in the coordinates of the degree-phi(L) power basis.
inline void append_cyclo_rows(std::vector<std::vector<Rational>>& rows,
                              const std::vector<CycloNum>& entries,
                              long level) {
  std::size_t width = static_cast<std::size_t>(euler_phi(level));
  std::vector<std::vector<Rational>> block(
      width, std::vector<Rational>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CycloNum v = entries[i].promoted(level);
    for (std::size_t c = 0; c < width; ++c) block[c][i] = v.coeffs()[c];
  }
  for (auto& r : block) rows.push_back(std::move(r));
}

inline QMat rows_to_matrix(const std::vector<std::vector<Rational>>& rows,
                           std::size_t cols) {
  QMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace detail

inline CharLattice char_lattice(const std::vector<RatFunc>& as) {
  std::size_t n = as.size();
  std::vector<PartialFractions> pf;
  pf.reserve(n);
  for (const auto& a : as) pf.push_back(partial_fractions(a));

  long level = 1;
  for (const auto& d : pf) {
    for (const auto& c : d.polypart.coeffs()) level = std::lcm(level, c.level());
    for (const auto& t : d.terms) {
      for (const auto& c : t.p.coeffs()) level = std::lcm(level, c.level());
      for (const auto& c : t.a.coeffs()) level = std::lcm(level, c.level());
    }
  }

  std::vector<std::vector<Rational>> van_rows;   // rational vanishing rows
  std::vector<std::vector<Rational>> int_rows;   // integrality rows

  // Polynomial parts must cancel.
  long maxdeg = kZeroPolyDegree;
  for (const auto& d : pf) maxdeg = std::max<long>(maxdeg, d.polypart.deg());
  for (long c = 0; c <= maxdeg; ++c) {
    std::vector<CycloNum> row(n);
    for (std::size_t i = 0; i < n; ++i)
      row[i] = pf[i].polypart.coeff(static_cast<std::size_t>(c));
    detail::append_cyclo_rows(van_rows, row, level);
  }

  // Group terms by pole: higher-order numerators must cancel outright; the
  // order-1 numerators must combine to an integer multiple of p'.
  struct Key {
    Poly p;
    int e;
  };
  auto key_less = [](const Key& a, const Key& b) {
    int c = poly_cmp(a.p, b.p);
    return c != 0 ? c < 0 : a.e < b.e;
  };
  std::map<Key, std::vector<Poly>, decltype(key_less)> by_pole(key_less);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : pf[i].terms) {
      auto& slot = by_pole[{t.p, t.e}];
      if (slot.empty()) slot.resize(n);
      slot[i] = t.a;
    }

  for (const auto& [key, nums] : by_pole) {
    long dp = key.p.deg();
    if (key.e >= 2) {
      for (long c = 0; c < dp; ++c) {
        std::vector<CycloNum> row(n);
        for (std::size_t i = 0; i < n; ++i)
          row[i] = nums[i].coeff(static_cast<std::size_t>(c));
        detail::append_cyclo_rows(van_rows, row, level);
      }
      continue;
    }
    // Order 1: numerator w_i splits as rho_i * p' + (shape defect).
    Poly dpoly = key.p.derivative();
    std::vector<CycloNum> rho(n);
    std::vector<Poly> defect(n);
    for (std::size_t i = 0; i < n; ++i) {
      rho[i] = nums[i].coeff(static_cast<std::size_t>(dp - 1)) / CycloNum(dp);
      defect[i] = nums[i] - rho[i] * dpoly;
    }
    for (long c = 0; c + 1 < dp; ++c) {
      std::vector<CycloNum> row(n);
      for (std::size_t i = 0; i < n; ++i)
        row[i] = defect[i].coeff(static_cast<std::size_t>(c));
      detail::append_cyclo_rows(van_rows, row, level);
    }
    // The combined ratio must be rational (non-rational coordinates vanish)
    // and an integer.
    std::size_t width = static_cast<std::size_t>(euler_phi(level));
    std::vector<Rational> int_row(n);
    for (std::size_t i = 0; i < n; ++i) {
      CycloNum v = rho[i].promoted(level);
      int_row[i] = v.coeffs()[0];
    }
    if (width > 1) {
      std::vector<std::vector<Rational>> block(
          width - 1, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        CycloNum v = rho[i].promoted(level);
        for (std::size_t c = 1; c < width; ++c) block[c - 1][i] = v.coeffs()[c];
      }
      for (auto& r : block) van_rows.push_back(std::move(r));
    }
    int_rows.push_back(std::move(int_row));
  }

  // Rational kernel intersected with Z^n, saturated.
  IMat kz = integer_kernel(detail::rows_to_matrix(van_rows, n));
  std::size_t r = kz.cols();

  // Impose the integrality conditions inside that kernel.
  IMat lat;
  if (int_rows.empty() || r == 0) {
    lat = kz;
  } else {
    QMat g = detail::rows_to_matrix(int_rows, n);
    QMat kq(n, r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j) kq(i, j) = Rational(kz(i, j));
    QMat b = g * kq;
    Integer den = 1;
    for (const auto& v : b.entries()) den = int_lcm(den, v.get_den());
    IMat c(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Rational scaled = b(i, j) * Rational(den);
        c(i, j) = scaled.get_num();
      }
    lat = kz * congruence_kernel(c, den);
  }

  HermiteForm hf = hermite_form(lat);
  CharLattice out;
  out.n = n;
  for (std::size_t j = 0; j < hf.pivot_rows.size(); ++j) {
    std::vector<Integer> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = hf.h(i, j);
    out.basis.push_back(std::move(v));
  }
  return out;
}

inline bool lattice_contains(const CharLattice& lat,
                             const std::vector<Integer>& m) {
  if (m.size() != lat.n) throw InputError("lattice_contains: length mismatch");
  QMat b(lat.n, lat.basis.size());
  for (std::size_t j = 0; j < lat.basis.size(); ++j)
    for (std::size_t i = 0; i < lat.n; ++i) b(i, j) = Rational(lat.basis[j][i]);
  QMat rhs(lat.n, 1);
  for (std::size_t i = 0; i < lat.n; ++i) rhs(i, 0) = Rational(m[i]);
  auto y = solve(b, rhs);
  if (!y) return false;
  for (const auto& v : y->entries())
    if (!rational_is_integer(v)) return false;
  return true;
}

inline DiagGroup group_from_lattice(const CharLattice& lat) {
  DiagGroup g;
  std::size_t r = lat.basis.size();
  g.torus_rank = static_cast<long>(lat.n - r);
  if (r == 0) return g;
  IMat m(lat.n, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < lat.n; ++i) m(i, j) = lat.basis[j][i];
  SmithForm sf = smith_form(m);
  for (const auto& d : sf.invariants)
    if (d >= 2) g.finite_factors.push_back(d);
  return g;
}

inline DiagGroup diag_group(const std::vector<RatFunc>& as) {
  return group_from_lattice(char_lattice(as));
}

inline DiagGroup rank1_group(const RatFunc& a) {
  return diag_group({a});
}

// Nonzero y in F with y' = a*y, when one exists.
inline std::optional<RatFunc> rational_solution_rank1(const RatFunc& a) {
  auto w = is_log_derivative(a);
  if (!w) return std::nullopt;
  RatFunc y(1);
  for (const auto& [p, e] : w->factors) {
    if (!mpz_fits_slong_p(e.get_mpz_t()))
      throw Error("rational_solution_rank1: exponent out of range");
    y = y * RatFunc(p).pow(e.get_si());
  }
  return y;
}

}  // namespace pvkit
