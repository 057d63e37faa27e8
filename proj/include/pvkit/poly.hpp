#pragma once

// Dense univariate polynomials over an exact field type K.
// Coefficients are stored lowest degree first with no trailing zeros, so the
// zero polynomial has an empty coefficient vector and degree sentinel -1.

#include <utility>

#include "pvkit/cyclo.hpp"

namespace pvkit {

inline constexpr int kZeroPolyDegree = -1;

template <class K>
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const K& c) : c_{c} { trim(); }
  Polynomial(long v) : c_{K(v)} { trim(); }
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial x() { return Polynomial(std::vector<K>{K(0), K(1)}); }

  static Polynomial monomial(const K& c, std::size_t deg) {
    std::vector<K> v(deg + 1, K(0));
    v[deg] = c;
    return Polynomial(std::move(v));
  }

  const std::vector<K>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }

  const K& lc() const {
    if (c_.empty()) throw Error("Polynomial: leading coefficient of zero");
    return c_.back();
  }

  bool is_constant() const { return c_.size() <= 1; }
  K constant_value() const { return coeff(0); }

  bool is_monic() const { return !c_.empty() && c_.back() == K(1); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<K> r = a.c_;
    if (b.c_.size() > r.size()) r.resize(b.c_.size(), K(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<K> r = a.c_;
    if (b.c_.size() > r.size()) r.resize(b.c_.size(), K(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    std::vector<K> r = c_;
    for (K& v : r) v = -v;
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == K(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const K& s, const Polynomial& p) {
    std::vector<K> r = p.c_;
    for (K& v : r) v = s * v;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(long e) const {
    if (e < 0) throw Error("Polynomial: negative exponent");
    Polynomial acc(K(1)), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  K eval(const K& v) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<K> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(long(i)) * c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / c_.back();
    return inv * *this;
  }

private:
  std::vector<K> c_;

  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
};

template <class K>
std::pair<Polynomial<K>, Polynomial<K>> poly_divmod(const Polynomial<K>& a,
                                                    const Polynomial<K>& b) {
  if (b.is_zero()) throw Error("poly_divmod: division by zero");
  std::vector<K> rem = a.coeffs();
  const std::vector<K>& d = b.coeffs();
  if (rem.size() < d.size()) return {Polynomial<K>(), a};
  std::vector<K> q(rem.size() - d.size() + 1, K(0));
  K lead_inv = K(1) / d.back();
  for (std::size_t qi = q.size(); qi-- > 0;) {
    K c = rem[qi + d.size() - 1] * lead_inv;
    if (c == K(0)) continue;
    q[qi] = c;
    for (std::size_t j = 0; j < d.size(); ++j)
      rem[qi + j] = rem[qi + j] - c * d[j];
  }
  return {Polynomial<K>(std::move(q)), Polynomial<K>(std::move(rem))};
}

template <class K>
Polynomial<K> poly_mod(const Polynomial<K>& a, const Polynomial<K>& b) {
  return poly_divmod(a, b).second;
}

// Monic gcd; remainders are normalized each step to tame coefficient growth.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Polynomial<K> r = poly_mod(a, b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;  // already monic (or zero when both inputs were zero)
}

template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& a) {
  if (a.is_zero() || a.deg() == 0) return a.monic();
  Polynomial<K> g = poly_gcd(a, a.derivative());
  return poly_divmod(a.monic(), g).first.monic();
}

// Yun's squarefree decomposition: a = unit * prod f_i^i with f_i squarefree
// and pairwise coprime. Returns the (f_i, i) pairs with f_i nonconstant.
template <class K>
std::vector<std::pair<Polynomial<K>, int>> squarefree_decomposition(
    const Polynomial<K>& a) {
  std::vector<std::pair<Polynomial<K>, int>> out;
  if (a.is_zero() || a.deg() == 0) return out;
  Polynomial<K> f = a.monic();
  Polynomial<K> g = poly_gcd(f, f.derivative());
  Polynomial<K> w = poly_divmod(f, g).first;
  Polynomial<K> y = poly_divmod(f.derivative(), g).first;
  int i = 1;
  while (w.deg() > 0) {
    Polynomial<K> z = y - w.derivative();
    Polynomial<K> h = poly_gcd(w, z);
    if (h.deg() > 0) out.emplace_back(h, i);
    w = poly_divmod(w, h).first;
    y = poly_divmod(z, h).first;
    ++i;
  }
  return out;
}

// Composition a(x + c), via Horner on (x + c).
template <class K>
Polynomial<K> poly_shift(const Polynomial<K>& a, const K& c) {
  Polynomial<K> shift(std::vector<K>{c, K(1)});
  Polynomial<K> acc;
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    acc = acc * shift + Polynomial<K>(a.coeffs()[i]);
  return acc;
}

// Resultant via the Euclidean remainder sequence.
template <class K>
K poly_resultant(Polynomial<K> a, Polynomial<K> b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  K acc(1);
  bool negate = false;
  while (b.deg() > 0) {
    Polynomial<K> r = poly_mod(a, b);
    if (r.is_zero()) return K(0);
    long da = a.deg(), db = b.deg(), dr = r.deg();
    if ((da % 2) && (db % 2)) negate = !negate;
    acc = acc * field_pow(b.lc(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant: res(a, b) = b^deg(a).
  acc = acc * field_pow(b.constant_value(), a.deg());
  return negate ? -acc : acc;
}

// Lagrange interpolation through (points[i], values[i]) with distinct points.
template <class K>
Polynomial<K> poly_interpolate(const std::vector<K>& points,
                               const std::vector<K>& values) {
  if (points.size() != values.size())
    throw Error("poly_interpolate: size mismatch");
  Polynomial<K> master(K(1));
  for (const K& p : points)
    master = master * Polynomial<K>(std::vector<K>{-p, K(1)});
  Polynomial<K> result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial<K> basis =
        poly_divmod(master, Polynomial<K>(std::vector<K>{-points[i], K(1)}))
            .first;
    K denom = basis.eval(points[i]);
    result = result + (values[i] / denom) * basis;
  }
  return result;
}

// Total order for canonical sorting: by degree, then coefficients from the top.
inline int poly_cmp(const Polynomial<CycloNum>& a, const Polynomial<CycloNum>& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    int c = CycloNum::cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c;
  }
  return 0;
}

using Poly = Polynomial<CycloNum>;
using QPoly = Polynomial<Rational>;

}  // namespace pvkit
