#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), represented on the power
// basis 1, zeta, ..., zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial.

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "pvkit/util.hpp"

namespace pvkit {

namespace detail {

// x^n - 1 as an integer coefficient vector, lowest degree first.
inline std::vector<Integer> xn_minus_one(long n) {
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1, Integer(0));
  v[0] = -1;
  v.back() = 1;
  return v;
}

// Exact division of integer polynomials; throws if b does not divide a.
inline std::vector<Integer> zpoly_divexact(std::vector<Integer> a,
                                           const std::vector<Integer>& b) {
  if (b.empty() || b.back() == 0) throw Error("zpoly_divexact: division by zero");
  if (a.size() < b.size()) {
    for (const Integer& c : a)
      if (c != 0) throw Error("zpoly_divexact: nonzero remainder");
    return {};
  }
  std::vector<Integer> q(a.size() - b.size() + 1, Integer(0));
  const Integer& lead = b.back();
  for (std::size_t qi = q.size(); qi-- > 0;) {
    const Integer& top = a[qi + b.size() - 1];
    Integer c = top / lead;
    if (c * lead != top) throw Error("zpoly_divexact: inexact division");
    q[qi] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[qi + j] -= c * b[j];
  }
  for (const Integer& c : a)
    if (c != 0) throw Error("zpoly_divexact: nonzero remainder");
  return q;
}

}  // namespace detail

namespace detail {

// Assumes the cache mutex is already held by the caller.
inline const std::vector<Integer>& cyclotomic_poly_rec(
    long n, std::map<long, std::vector<Integer>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Integer> num = xn_minus_one(n);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = zpoly_divexact(num, cyclotomic_poly_rec(d, cache));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace detail

// N-th cyclotomic polynomial as integer coefficients, lowest degree first.
// Computed by dividing x^N - 1 by the product of Phi_d over proper divisors d.
// Cached entries are never erased, so returned references stay valid.
inline const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n <= 0) throw InputError("cyclotomic_polynomial: level must be positive");
  static std::map<long, std::vector<Integer>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  return detail::cyclotomic_poly_rec(n, cache);
}

class CycloNum {
public:
  CycloNum() : level_(1), c_(1, Rational(0)) {}
  CycloNum(long v) : level_(1), c_(1, Rational(v)) {}
  CycloNum(const Rational& v) : level_(1), c_(1, v) {}

  // Coefficients on the power basis at the given level; reduced mod Phi_N.
  CycloNum(long level, std::vector<Rational> coeffs) : level_(level) {
    if (level < 1) throw InputError("CycloNum: level must be positive");
    c_ = reduce(level, std::move(coeffs));
  }

  static CycloNum zeta(long level) {
    long d = euler_phi(level);
    std::vector<Rational> c(static_cast<std::size_t>(std::max(d, 2L)), Rational(0));
    c[1] = 1;
    return CycloNum(level, std::move(c));
  }

  long level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& q) { return q == 0; });
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  // Only meaningful when is_rational() holds.
  const Rational& rational_value() const {
    if (!is_rational()) throw Error("CycloNum: value is not rational");
    return c_[0];
  }

  // Embedding Q(zeta_M) -> Q(zeta_L) for M | L via zeta_M = zeta_L^(L/M).
  CycloNum promoted(long new_level) const {
    if (new_level == level_) return *this;
    if (new_level % level_ != 0)
      throw Error("CycloNum: cannot promote to non-multiple level");
    long step = new_level / level_;
    std::vector<Rational> raw(static_cast<std::size_t>(step) * c_.size() + 1,
                              Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j)
      raw[j * static_cast<std::size_t>(step)] = c_[j];
    return CycloNum(new_level, std::move(raw));
  }

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  CycloNum operator-() const {
    CycloNum r = *this;
    for (Rational& q : r.c_) q = -q;
    return r;
  }

  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    auto [x, y] = aligned(a, b);
    std::vector<Rational> raw(2 * x.c_.size(), Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) {
        if (y.c_[j] == 0) continue;
        raw[i + j] += x.c_[i] * y.c_[j];
      }
    }
    return CycloNum(x.level_, std::move(raw));
  }

  CycloNum inverse() const {
    if (is_zero()) throw Error("CycloNum: division by zero");
    if (is_rational()) {
      CycloNum r = *this;
      r.c_[0] = 1 / r.c_[0];
      for (std::size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = 0;
      return r;
    }
    // Extended Euclid against Phi_N over Q: u*this + v*Phi = 1.
    std::vector<Rational> phi = phi_rational(level_);
    std::vector<Rational> r0 = phi, r1 = trimmed(c_);
    std::vector<Rational> t0(1, Rational(0)), t1(1, Rational(1));
    while (!r1.empty()) {
      auto [q, r2] = qdivmod(r0, r1);
      std::vector<Rational> t2 = qsub(t0, qmul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1)
      throw Error("CycloNum: inverse failed; value not invertible");
    std::vector<Rational> inv = t0;
    for (Rational& q : inv) q /= r0[0];
    return CycloNum(level_, std::move(inv));
  }

  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) {
    return a * b.inverse();
  }

  CycloNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum base = *this, acc(1);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.level_ == b.level_) return a.c_ == b.c_;
    auto [x, y] = aligned(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  // Total order used for canonical sorting; compares at the common level.
  static int cmp(const CycloNum& a, const CycloNum& b) {
    auto [x, y] = aligned(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      int c = rational_cmp(x.c_[i], y.c_[i]);
      if (c != 0) return c;
    }
    return 0;
  }

private:
  long level_;
  std::vector<Rational> c_;  // length phi(level_)

  static std::vector<Rational> phi_rational(long level) {
    const std::vector<Integer>& phi = cyclotomic_polynomial(level);
    std::vector<Rational> r(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r[i] = Rational(phi[i]);
    return r;
  }

  static std::vector<Rational> trimmed(std::vector<Rational> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }

  static std::vector<Rational> qmul(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trimmed(std::move(r));
  }

  static std::vector<Rational> qsub(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) {
    std::vector<Rational> r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trimmed(std::move(r));
  }

  static std::pair<std::vector<Rational>, std::vector<Rational>> qdivmod(
      std::vector<Rational> a, const std::vector<Rational>& b) {
    if (b.empty()) throw Error("CycloNum: internal division by zero");
    a = trimmed(std::move(a));
    std::vector<Rational> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
      Rational c = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      q[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
      a.pop_back();  // leading term cancels exactly
      a = trimmed(std::move(a));
    }
    return {std::move(q), std::move(a)};
  }

  // Reduce a raw coefficient vector mod Phi_level and pad to length phi(level).
  static std::vector<Rational> reduce(long level, std::vector<Rational> raw) {
    const std::vector<Integer>& phi = cyclotomic_polynomial(level);
    std::size_t d = phi.size() - 1;  // = euler_phi(level)
    // Long division by the monic Phi.
    for (std::size_t i = raw.size(); i-- > d;) {
      if (raw[i] == 0) continue;
      Rational c = raw[i];
      raw[i] = 0;
      for (std::size_t j = 0; j < d; ++j)
        raw[i - d + j] -= c * Rational(phi[j]);
    }
    raw.resize(d, Rational(0));
    return raw;
  }

  static std::pair<CycloNum, CycloNum> aligned(const CycloNum& a,
                                               const CycloNum& b) {
    if (a.level_ == b.level_) return {a, b};
    long l = std::lcm(a.level_, b.level_);
    return {a.promoted(l), b.promoted(l)};
  }
};

inline CycloNum field_pow(const CycloNum& base, long e) { return base.pow(e); }

// All roots of unity contained in Q(zeta_N): the group generated by -1 and
// zeta_N, of order N for even N and 2N for odd N.
inline long roots_of_unity_order(long level) {
  return level % 2 == 0 ? level : 2 * level;
}

// zeta_k inside Q(zeta_level); requires that a primitive k-th root exists.
inline CycloNum root_of_unity(long level, long k) {
  long m = roots_of_unity_order(level);
  if (m % k != 0)
    throw InputError("root_of_unity: no primitive " + std::to_string(k) +
                     "-th root at zeta level " + std::to_string(level));
  // Generator of the root group: zeta_N for even N, -zeta_N for odd N.
  CycloNum g = CycloNum::zeta(level);
  if (level % 2 != 0) g = -g;
  return g.pow(m / k);
}

}  // namespace pvkit
