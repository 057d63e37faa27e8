#include <iostream>
#include "pvkit/intmat.hpp"
using namespace pvkit;
namespace {
// Same algorithm as smith_form with iteration tracing.
void traced(IMat d) {
  std::size_t n = d.rows(), m = d.cols();
  IMat u = IMat::identity(n), v = IMat::identity(m);
  auto row_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < m; ++j) std::swap(d(x, j), d(y, j));
  };
  auto row_combine = [&](std::size_t r1, std::size_t r2, const Integer& s,
                         const Integer& t, const Integer& q1, const Integer& q2) {
    for (std::size_t j = 0; j < m; ++j) {
      Integer a1 = d(r1, j), a2 = d(r2, j);
      d(r1, j) = s * a1 + t * a2;
      d(r2, j) = q1 * a2 - q2 * a1;
    }
  };
  std::size_t t = 0;
  long outer = 0;
  while (t < n && t < m) {
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < n && !found; ++i)
      for (std::size_t j = t; j < m && !found; ++j)
        if (!(d(i, j) == 0)) { pi = i; pj = j; found = true; }
    if (!found) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) { detail::col_swap(d, pj, t); detail::col_swap(v, pj, t); }
    long inner = 0;
    for (;;) {
      if (++inner > 6 || ++outer > 2000) {
        std::cout << "STUCK at t=" << t << " inner=" << inner << std::endl;
        std::cout << "d(t,t)=" << d(t, t) << std::endl;
        for (std::size_t i = t; i < n; ++i) {
          for (std::size_t j = t; j < m; ++j) std::cout << d(i, j) << " ";
          std::cout << std::endl;
        }
        if (inner > 12) return;
      }
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Integer g, s, tt;
        detail::xgcd(d(t, t), d(i, t), g, s, tt);
        row_combine(t, i, s, tt, d(t, t) / g, d(i, t) / g);
      }
      bool row_dirty = false;
      for (std::size_t j = t + 1; j < m; ++j) {
        if (d(t, j) == 0) continue;
        Integer g, s, tt;
        detail::xgcd(d(t, t), d(t, j), g, s, tt);
        detail::col_combine(d, v, t, j, s, tt, d(t, t) / g, d(t, j) / g);
        row_dirty = true;
      }
      if (!row_dirty) {
        bool col_clean = true;
        for (std::size_t i = t + 1; i < n; ++i)
          if (!(d(i, t) == 0)) col_clean = false;
        if (col_clean) break;
      }
    }
    std::cout << "pivot " << t << " done after inner loops" << std::endl;
    ++t;
    if (t > 3) return;
  }
}
}  // namespace
int main() {
  long rows[9][9] = {
    {1,0,0,0,0,0,0,0,0},
    {0,1,0,0,0,0,1,0,0},
    {0,0,1,0,0,0,1,0,0},
    {0,0,0,1,0,0,1,0,0},
    {0,0,0,0,1,0,0,0,0},
    {0,0,0,0,0,1,0,0,0},
    {0,0,0,0,0,0,2,0,0},
    {0,0,0,0,0,0,0,1,0},
    {0,0,0,0,0,0,0,0,1}};
  IMat m(9, 9);
  for (std::size_t j = 0; j < 9; ++j)
    for (std::size_t i = 0; i < 9; ++i) m(i, j) = Integer(rows[j][i]);
  traced(m);
  return 0;
}
