#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pvkit {

using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when text input does not conform to the expression grammar.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Raised on malformed structured inputs (bad dimensions, bad fixtures, ...).
class InputError : public Error {
public:
  using Error::Error;
};

inline long euler_phi(long n) {
  if (n <= 0) throw InputError("euler_phi: argument must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline int rational_cmp(const Rational& a, const Rational& b) {
  return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
}

inline bool rational_is_integer(const Rational& q) {
  return q.get_den() == 1;
}

inline std::string rational_str(const Rational& q) {
  return q.get_str();
}

inline Rational field_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw Error("field_pow: zero to negative power");
    return field_pow(1 / base, -e);
  }
  Rational acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace pvkit
