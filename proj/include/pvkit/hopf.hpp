#pragma once

// Finite groups as Hopf data, finite delta-Hopf-Galois extensions of F with
// structure-constant tables, the canonical map, and the bundled fixture
// families (Kummer, split, corrupted).
//
// Conventions used throughout this header and its consumers:
//   - S has F-basis b_0..b_{k-1}; the multiplication table stores b_i*b_j in
//     column i*k+j.
//   - H'_0 = functions(Gamma) has basis the indicator functions e_sigma,
//     indexed by the group elements with the identity at index 0; it carries
//     the zero derivation.
//   - S (x) H'_0 is flattened with the H index fastest: row l*h + sigma.

#include <string>
#include <utility>
#include <vector>

#include "pvkit/matrix.hpp"
#include "pvkit/ratfunc.hpp"

namespace pvkit {

struct FinGroupHopf {
  long k = 1;
  std::vector<std::string> elements;
  std::vector<std::vector<long>> mult;

  FinGroupHopf() : elements{"1"}, mult{{0}} {}
  FinGroupHopf(std::vector<std::string> labels,
               std::vector<std::vector<long>> table)
      : k(static_cast<long>(labels.size())),
        elements(std::move(labels)),
        mult(std::move(table)) {
    validate();
  }

  long op(long i, long j) const {
    return mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  long inverse(long i) const {
    for (long j = 0; j < k; ++j)
      if (op(i, j) == 0) return j;
    throw InputError("FinGroupHopf: element has no inverse");
  }

private:
  void validate() const {
    if (k < 1) throw InputError("FinGroupHopf: empty element list");
    if (mult.size() != static_cast<std::size_t>(k))
      throw InputError("FinGroupHopf: multiplication table shape mismatch");
    for (const auto& row : mult) {
      if (row.size() != static_cast<std::size_t>(k))
        throw InputError("FinGroupHopf: multiplication table shape mismatch");
      for (long v : row)
        if (v < 0 || v >= k)
          throw InputError("FinGroupHopf: table entry out of range");
    }
    for (long i = 0; i < k; ++i)
      if (op(0, i) != i || op(i, 0) != i)
        throw InputError("FinGroupHopf: index 0 is not an identity");
    for (long i = 0; i < k; ++i) {
      bool has_inv = false;
      for (long j = 0; j < k; ++j) has_inv = has_inv || op(i, j) == 0;
      if (!has_inv) throw InputError("FinGroupHopf: element has no inverse");
    }
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j)
        for (long l = 0; l < k; ++l)
          if (op(op(i, j), l) != op(i, op(j, l)))
            throw InputError("FinGroupHopf: table is not associative");
  }
};

inline FinGroupHopf cyclic_group(long k) {
  if (k < 1) throw InputError("cyclic_group: order must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<long>> table(static_cast<std::size_t>(k),
                                       std::vector<long>(static_cast<std::size_t>(k), 0));
  for (long i = 0; i < k; ++i) {
    if (i == 0)
      labels.push_back("1");
    else if (i == 1)
      labels.push_back("g");
    else
      labels.push_back("g^" + std::to_string(i));
    for (long j = 0; j < k; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (i + j) % k;
  }
  return FinGroupHopf(std::move(labels), std::move(table));
}

// A finite free F-algebra S with derivation and H'_0-coaction, all given by
// tables over F. Only shapes are enforced here; the axioms are checked by
// hopf_galois_report so that broken fixtures remain representable.
struct FinHopfGalois {
  FinGroupHopf gamma;
  long k = 1;
  FMat mult;        // k x k^2, column i*k+j holds b_i * b_j
  FMat derivation;  // k x k
  FMat coaction;    // (k*h) x k, row l*h + sigma

  FinHopfGalois() = default;
  FinHopfGalois(FinGroupHopf g, long dim, FMat m, FMat d, FMat c)
      : gamma(std::move(g)),
        k(dim),
        mult(std::move(m)),
        derivation(std::move(d)),
        coaction(std::move(c)) {
    std::size_t kk = static_cast<std::size_t>(k);
    std::size_t hh = static_cast<std::size_t>(gamma.k);
    if (k < 1) throw InputError("FinHopfGalois: dimension must be positive");
    if (mult.rows() != kk || mult.cols() != kk * kk)
      throw InputError("FinHopfGalois: multiplication table shape mismatch");
    if (derivation.rows() != kk || derivation.cols() != kk)
      throw InputError("FinHopfGalois: derivation shape mismatch");
    if (coaction.rows() != kk * hh || coaction.cols() != kk)
      throw InputError("FinHopfGalois: coaction shape mismatch");
  }

  RatFunc mult_c(long m, long i, long j) const {
    return mult(static_cast<std::size_t>(m),
                static_cast<std::size_t>(i * k + j));
  }
  RatFunc coact_c(long l, long sigma, long j) const {
    return coaction(static_cast<std::size_t>(l * gamma.k + sigma),
                    static_cast<std::size_t>(j));
  }
};

// Coordinates of the multiplicative unit of S, if one exists.
inline std::optional<FMat> algebra_unit(const FinHopfGalois& s) {
  std::size_t k = static_cast<std::size_t>(s.k);
  FMat a(k * k, k), b(k * k, 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t i = 0; i < k; ++i)
        a(j * k + l, i) = s.mult(l, i * k + j);
      b(j * k + l, 0) = l == j ? RatFunc(1) : RatFunc(0);
    }
  return solve(a, b);
}

// Matrix of can_S : S (x) S -> S (x) H'_0, x (x) y -> (x (x) 1) * Delta_S(y).
inline FMat can_map(const FinHopfGalois& s) {
  long k = s.k, h = s.gamma.k;
  FMat c(static_cast<std::size_t>(k * h), static_cast<std::size_t>(k * k));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      for (long l = 0; l < k; ++l)
        for (long sigma = 0; sigma < h; ++sigma) {
          RatFunc w = s.coact_c(l, sigma, j);
          if (w.is_zero()) continue;
          for (long m = 0; m < k; ++m) {
            RatFunc t = s.mult_c(m, i, l);
            if (t.is_zero()) continue;
            std::size_t row = static_cast<std::size_t>(m * h + sigma);
            std::size_t col = static_cast<std::size_t>(i * k + j);
            c(row, col) = c(row, col) + w * t;
          }
        }
  return c;
}

struct HopfGaloisReport {
  bool ok = true;
  std::string failure;
};

inline HopfGaloisReport hopf_galois_report(const FinHopfGalois& s) {
  long k = s.k, h = s.gamma.k;
  auto fail = [](std::string why) {
    return HopfGaloisReport{false, std::move(why)};
  };
  auto mc = [&](long i, long j) {
    FMat col(static_cast<std::size_t>(k), 1);
    for (long m = 0; m < k; ++m)
      col(static_cast<std::size_t>(m), 0) = s.mult_c(m, i, j);
    return col;
  };

  for (long i = 0; i < k; ++i)
    for (long j = i + 1; j < k; ++j)
      if (!(mc(i, j) == mc(j, i)))
        return fail("multiplication is not commutative");

  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      for (long l = 0; l < k; ++l) {
        FMat lhs(static_cast<std::size_t>(k), 1);
        FMat rhs(static_cast<std::size_t>(k), 1);
        for (long m = 0; m < k; ++m) {
          RatFunc cm = s.mult_c(m, i, j);
          if (!cm.is_zero()) lhs = lhs + cm * mc(m, l);
          RatFunc dm = s.mult_c(m, j, l);
          if (!dm.is_zero()) rhs = rhs + dm * mc(i, m);
        }
        if (!(lhs == rhs)) return fail("multiplication is not associative");
      }

  auto unit = algebra_unit(s);
  if (!unit) return fail("algebra has no unit");

  const FMat& d = s.derivation;
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      FMat lhs = derive(mc(i, j)) + d * mc(i, j);
      FMat rhs(static_cast<std::size_t>(k), 1);
      for (long m = 0; m < k; ++m) {
        RatFunc di = d(static_cast<std::size_t>(m), static_cast<std::size_t>(i));
        if (!di.is_zero()) rhs = rhs + di * mc(m, j);
        RatFunc dj = d(static_cast<std::size_t>(m), static_cast<std::size_t>(j));
        if (!dj.is_zero()) rhs = rhs + dj * mc(i, m);
      }
      if (!(lhs == rhs)) return fail("derivation violates the Leibniz rule");
    }

  for (long j = 0; j < k; ++j)
    for (long l = 0; l < k; ++l) {
      RatFunc want = l == j ? RatFunc(1) : RatFunc(0);
      if (!(s.coact_c(l, 0, j) == want))
        return fail("coaction is not counital");
    }

  for (long j = 0; j < k; ++j)
    for (long m = 0; m < k; ++m)
      for (long tau = 0; tau < h; ++tau)
        for (long sigma = 0; sigma < h; ++sigma) {
          RatFunc acc;
          for (long l = 0; l < k; ++l)
            acc = acc + s.coact_c(l, sigma, j) * s.coact_c(m, tau, l);
          if (!(acc == s.coact_c(m, s.gamma.op(tau, sigma), j)))
            return fail("coaction is not coassociative");
        }

  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      for (long n = 0; n < k; ++n)
        for (long sigma = 0; sigma < h; ++sigma) {
          RatFunc lhs;
          for (long m = 0; m < k; ++m)
            lhs = lhs + s.mult_c(m, i, j) * s.coact_c(n, sigma, m);
          RatFunc rhs;
          for (long l = 0; l < k; ++l)
            for (long m = 0; m < k; ++m) {
              RatFunc w = s.coact_c(l, sigma, i) * s.coact_c(m, sigma, j);
              if (!w.is_zero()) rhs = rhs + w * s.mult_c(n, l, m);
            }
          if (!(lhs == rhs)) return fail("coaction is not an algebra map");
        }
  for (long l = 0; l < k; ++l)
    for (long sigma = 0; sigma < h; ++sigma) {
      RatFunc acc;
      for (long j = 0; j < k; ++j)
        acc = acc + (*unit)(static_cast<std::size_t>(j), 0) *
                        s.coact_c(l, sigma, j);
      if (!(acc == (*unit)(static_cast<std::size_t>(l), 0)))
        return fail("coaction is not an algebra map");
    }

  FMat dh = kron(d, FMat::identity(static_cast<std::size_t>(h)));
  if (!(derive(s.coaction) + dh * s.coaction == s.coaction * d))
    return fail("coaction does not commute with the derivation");

  if (k != h || !try_inverse(can_map(s)))
    return fail("canonical map is not invertible");

  return HopfGaloisReport{};
}

inline bool is_hopf_galois(const FinHopfGalois& s) {
  return hopf_galois_report(s).ok;
}

// The per-element automorphisms recovered from the coaction via
// gamma_sigma = (id (x) eval_sigma) o Delta_S.
inline std::vector<FMat> gamma_matrices(const FinHopfGalois& s) {
  std::vector<FMat> out;
  out.reserve(static_cast<std::size_t>(s.gamma.k));
  for (long sigma = 0; sigma < s.gamma.k; ++sigma) {
    FMat g(static_cast<std::size_t>(s.k), static_cast<std::size_t>(s.k));
    for (long l = 0; l < s.k; ++l)
      for (long j = 0; j < s.k; ++j)
        g(static_cast<std::size_t>(l), static_cast<std::size_t>(j)) =
            s.coact_c(l, sigma, j);
    out.push_back(std::move(g));
  }
  return out;
}

// S = F[t]/(t^k - x) with t' = t/(kx) and Delta_S(t) = t (x) chi, where chi
// takes the value zeta_k^sigma at sigma. Basis: 1, t, ..., t^{k-1}.
inline FinHopfGalois kummer_extension(long k) {
  if (k < 1) throw InputError("kummer_extension: order must be positive");
  FinGroupHopf g = cyclic_group(k);
  std::size_t kk = static_cast<std::size_t>(k);
  CycloNum zk = k == 1 ? CycloNum(1) : root_of_unity(k, k);

  FMat mult(kk, kk * kk);
  RatFunc xf = RatFunc::x();
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      long e = i + j;
      if (e < k)
        mult(static_cast<std::size_t>(e), static_cast<std::size_t>(i * k + j)) =
            RatFunc(1);
      else
        mult(static_cast<std::size_t>(e - k),
             static_cast<std::size_t>(i * k + j)) = xf;
    }

  FMat deriv(kk, kk);
  for (long i = 0; i < k; ++i)
    deriv(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
        RatFunc(Poly(std::vector<CycloNum>{CycloNum(i)}),
                Poly(std::vector<CycloNum>{CycloNum(0), CycloNum(k)}));

  FMat coact(kk * kk, kk);
  for (long i = 0; i < k; ++i)
    for (long sigma = 0; sigma < k; ++sigma)
      coact(static_cast<std::size_t>(i * k + sigma),
            static_cast<std::size_t>(i)) = RatFunc(zk.pow(sigma * i));

  return FinHopfGalois(std::move(g), k, std::move(mult), std::move(deriv),
                       std::move(coact));
}

// S = F^Gamma with componentwise product, zero derivation, and the regular
// coaction gamma_upsilon(e_sigma) = e_{sigma upsilon^{-1}}.
inline FinHopfGalois split_extension(const FinGroupHopf& g) {
  long k = g.k;
  std::size_t kk = static_cast<std::size_t>(k);
  FMat mult(kk, kk * kk);
  for (long i = 0; i < k; ++i)
    mult(static_cast<std::size_t>(i), static_cast<std::size_t>(i * k + i)) =
        RatFunc(1);
  FMat deriv(kk, kk);
  FMat coact(kk * kk, kk);
  for (long sigma = 0; sigma < k; ++sigma)
    for (long upsilon = 0; upsilon < k; ++upsilon) {
      long l = g.op(sigma, g.inverse(upsilon));
      coact(static_cast<std::size_t>(l * k + upsilon),
            static_cast<std::size_t>(sigma)) = RatFunc(1);
    }
  return FinHopfGalois(g, k, std::move(mult), std::move(deriv),
                       std::move(coact));
}

inline FinHopfGalois split_extension(long k) {
  return split_extension(cyclic_group(k));
}

// Kummer algebra whose coaction is replaced by s -> s (x) 1. Every algebra
// axiom still holds, but the canonical map collapses onto S (x) 1 and is
// singular for k >= 2.
inline FinHopfGalois corrupted_extension(long k) {
  FinHopfGalois s = kummer_extension(k);
  std::size_t kk = static_cast<std::size_t>(k);
  FMat coact(kk * kk, kk);
  for (long j = 0; j < k; ++j)
    for (long sigma = 0; sigma < k; ++sigma)
      coact(static_cast<std::size_t>(j * k + sigma),
            static_cast<std::size_t>(j)) = RatFunc(1);
  s.coaction = std::move(coact);
  return s;
}

}  // namespace pvkit
