#include <iostream>
#include "pvkit/classify.hpp"
#include "pvkit/parse.hpp"
using namespace pvkit;
int main() {
  const char* d[3] = {"0", "1/(2*x)", "-1/(2*x)"};
  std::vector<RatFunc> rates;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      rates.push_back(parse(d[j]) - parse(d[i]));
  CharLattice lat = char_lattice(rates);
  std::cout << "basis vectors (columns):" << std::endl;
  for (auto& b : lat.basis) {
    for (auto& e : b) std::cout << e << " ";
    std::cout << std::endl;
  }
  return 0;
}
