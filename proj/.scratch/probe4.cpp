#include <iostream>
#include "pvkit/intmat.hpp"
using namespace pvkit;
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
  // group_from_lattice builds m(i,j) = basis[j][i]: transpose of the above rows
  IMat m(9, 9);
  for (std::size_t j = 0; j < 9; ++j)
    for (std::size_t i = 0; i < 9; ++i) m(i, j) = Integer(rows[j][i]);
  std::cout << "running smith_form" << std::endl;
  SmithForm sf = smith_form(m);
  std::cout << "invariants:";
  for (auto& d : sf.invariants) std::cout << " " << d;
  std::cout << std::endl;
  return 0;
}
