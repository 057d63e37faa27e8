#include <iostream>
#include "pvkit/cocycle.hpp"
using namespace pvkit;
int main() {
  CycloNum m1 = -CycloNum(1).promoted(4);
  std::cout << "q = " << to_string(m1) << " level " << m1.level() << "\n";
  auto r = detail::square_roots(m1);
  std::cout << "roots: " << r.size() << "\n";
  for (auto& v : r) std::cout << "  " << to_string(v) << "\n";
  Poly z2(std::vector<CycloNum>{-m1, CycloNum(0).promoted(4), CycloNum(1).promoted(4)});
  auto fac = factor_irreducible(z2);
  std::cout << "factors: " << fac.factors.size() << "\n";
  for (auto& [f, e] : fac.factors) std::cout << "  deg " << f.deg() << " ^" << e << "\n";
  return 0;
}
