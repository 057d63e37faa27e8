#pragma once

#include <random>
#include <vector>

#include "pvkit/matrix.hpp"
#include "pvkit/parse.hpp"

namespace testutil {

inline pvkit::FMat fmat(std::size_t n, std::size_t m,
                        std::initializer_list<const char*> es, long level = 1) {
  std::vector<pvkit::RatFunc> v;
  for (const char* s : es) v.push_back(pvkit::parse(s, level));
  return pvkit::FMat(n, m, std::move(v));
}

// Random rational function with small integer coefficients: a low-degree
// polynomial divided by a power of x or of x+1, so inverses stay cheap.
inline pvkit::RatFunc rand_rf(std::mt19937_64& rng, long level = 1,
                              int deg = 2) {
  using namespace pvkit;
  std::vector<CycloNum> cs;
  for (int i = 0; i <= deg; ++i) {
    long c = static_cast<long>(rng() % 7) - 3;
    if (level > 1 && rng() % 4 == 0)
      cs.push_back(CycloNum(c) + root_of_unity(level, level));
    else
      cs.push_back(CycloNum(c));
  }
  RatFunc num{Poly(std::move(cs))};
  switch (rng() % 3) {
    case 0:
      return num;
    case 1:
      return num / RatFunc::x();
    default:
      return num / (RatFunc::x() + RatFunc(1));
  }
}

inline pvkit::FMat rand_fmat(std::mt19937_64& rng, std::size_t n,
                             std::size_t m, long level = 1, int deg = 1) {
  pvkit::FMat a(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = rand_rf(rng, level, deg);
  return a;
}

inline pvkit::FMat rand_invertible(std::mt19937_64& rng, std::size_t n,
                                   long level = 1, int deg = 1) {
  while (true) {
    pvkit::FMat p = rand_fmat(rng, n, n, level, deg);
    for (std::size_t i = 0; i < n; ++i) p(i, i) = p(i, i) + pvkit::RatFunc(1);
    if (pvkit::try_inverse(p)) return p;
  }
}

}  // namespace testutil
