#pragma once

// Rational functions over Q(zeta_N) in canonical form: numerator and monic
// denominator coprime, zero is 0/1. The derivation is d/dx extended by the
// quotient rule; constants are exactly the elements of Q(zeta_N).

#include <sstream>

#include "pvkit/factor.hpp"

namespace pvkit {

class RatFunc {
public:
  RatFunc() : num_(), den_(CycloNum(1)) {}
  RatFunc(long v) : num_(v), den_(CycloNum(1)) {}
  RatFunc(const CycloNum& v) : num_(v), den_(CycloNum(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(CycloNum(1)) {}

  RatFunc(const Poly& num, const Poly& den) { assign(num, den); }

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.deg() == 0; }
  bool is_constant() const { return den_.deg() == 0 && num_.deg() <= 0; }

  CycloNum constant_value() const {
    if (!is_constant()) throw Error("RatFunc: value is not constant");
    return num_.coeff(0);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    // Reduce via the denominator gcd to keep intermediate degrees low.
    Poly g = poly_gcd(a.den_, b.den_);
    Poly da = poly_divmod(a.den_, g).first;
    Poly db = poly_divmod(b.den_, g).first;
    return RatFunc(a.num_ * db + b.num_ * da, da * b.den_);
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    // Cross-cancel before multiplying.
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly n1 = poly_divmod(a.num_, g1).first;
    Poly d2 = poly_divmod(b.den_, g1).first;
    Poly n2 = poly_divmod(b.num_, g2).first;
    Poly d1 = poly_divmod(a.den_, g2).first;
    RatFunc r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    r.normalize_lc();
    return r;
  }

  RatFunc inverse() const {
    if (is_zero()) throw Error("RatFunc: division by zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_lc();
    return r;
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
  }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  // d/dx by the quotient rule.
  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(),
                   den_ * den_);
  }

private:
  Poly num_;
  Poly den_;

  void assign(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error("RatFunc: zero denominator");
    Poly g = poly_gcd(num, den);
    if (g.deg() > 0) {
      num_ = poly_divmod(num, g).first;
      den_ = poly_divmod(den, g).first;
    } else {
      num_ = num;
      den_ = den;
    }
    normalize_lc();
  }

  void normalize_lc() {
    if (num_.is_zero()) {
      den_ = Poly(CycloNum(1));
      return;
    }
    CycloNum inv = CycloNum(1) / den_.lc();
    den_ = inv * den_;
    num_ = inv * num_;
  }
};

inline RatFunc derive(const RatFunc& f) { return f.derivative(); }

// ---- canonical printing -------------------------------------------------
//
// The printed form re-parses to the same value. Polynomials print highest
// degree first; cyclotomic coefficients with a nonzero zeta part are fully
// parenthesized; rational functions print as (num)/(den).

namespace detail {

inline std::string rational_term_str(const Rational& q, long zeta_exp) {
  std::ostringstream os;
  if (zeta_exp == 0) return rational_str(q);
  if (q == 1) {
  } else if (q == -1) {
    os << "-";
  } else {
    os << rational_str(q) << "*";
  }
  os << "zeta";
  if (zeta_exp > 1) os << "^" << zeta_exp;
  return os.str();
}

}  // namespace detail

inline std::string to_string(const CycloNum& v) {
  if (v.is_rational()) return rational_str(v.coeffs()[0]);
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
    const Rational& q = v.coeffs()[j];
    if (q == 0) continue;
    if (first) {
      out += detail::rational_term_str(q, static_cast<long>(j));
      first = false;
      continue;
    }
    if (q > 0) {
      out += " + " + detail::rational_term_str(q, static_cast<long>(j));
    } else {
      out += " - " + detail::rational_term_str(-q, static_cast<long>(j));
    }
  }
  return out;
}

inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const CycloNum& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    std::string term;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.coeffs()[0];
      if (q < 0) {
        negative = true;
        q = -q;
      }
      if (i == 0) {
        term = rational_str(q);
      } else if (q == 1) {
        term = "";
      } else {
        term = rational_str(q) + "*";
      }
    } else {
      term = "(" + to_string(c) + ")";
      if (i > 0) term += "*";
    }
    if (i >= 1) {
      term += "x";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (first) {
      out += (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

inline std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace pvkit
