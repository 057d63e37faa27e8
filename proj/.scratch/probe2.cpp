#include <chrono>
#include <iostream>
#include "pvkit/classify.hpp"
#include "pvkit/parse.hpp"
using namespace pvkit;
using Clock = std::chrono::steady_clock;
double ms(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}
int main() {
  const char* d[3] = {"0", "1/(2*x)", "-1/(2*x)"};
  std::vector<RatFunc> rates;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      rates.push_back(parse(d[j]) - parse(d[i]));
  std::cout << "rates built: " << rates.size() << std::endl;
  auto t0 = Clock::now();
  CharLattice lat = char_lattice(rates);
  auto t1 = Clock::now();
  std::cout << "char_lattice: " << ms(t0, t1) << " ms, basis " << lat.basis.size() << std::endl;
  t0 = Clock::now();
  DiagGroup g = group_from_lattice(lat);
  t1 = Clock::now();
  std::cout << "group_from_lattice: " << ms(t0, t1) << " ms -> " << g.name() << std::endl;
  return 0;
}
