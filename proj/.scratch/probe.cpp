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
  std::vector<std::vector<const char*>> diags = {
    {"0", "1/(2*x)", "-1/(2*x)"},
    {"1", "1/(2*x)", "-1-1/(2*x)"},
    {"1/(3*x)", "1/(2*x)", "-5/(6*x)"},
    {"1", "1/x", "-1-1/x"},
    {"1", "1", "-2"},
  };
  for (auto& d : diags) {
    std::vector<RatFunc> rates;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        rates.push_back(parse(d[j]) - parse(d[i]));
    auto t0 = Clock::now();
    DiagGroup g = diag_group(rates);
    auto t1 = Clock::now();
    std::cout << d[0] << "," << d[1] << "," << d[2] << " -> " << g.name()
              << "  (" << ms(t0, t1) << " ms)\n";
  }
  return 0;
}
