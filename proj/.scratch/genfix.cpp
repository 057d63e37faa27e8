#include <fstream>
#include <iostream>

#include "pvkit/io.hpp"

using namespace pvkit;

static Json hopf_json(const FinHopfGalois& s, long level) {
  Json out;
  out["zeta_level"] = level;
  out["group"] = group_to_json(s.gamma);
  out["k"] = s.k;
  out["mult"] = fmat_to_json(s.mult);
  out["derivation"] = fmat_to_json(s.derivation);
  out["coaction"] = fmat_to_json(s.coaction);
  return out;
}

int main() {
  std::ofstream("fixtures/kummer2.json") << hopf_json(kummer_extension(2), 2).dump(2) << "\n";
  std::ofstream("fixtures/corrupted2.json")
      << hopf_json(corrupted_extension(2), 2).dump(2) << "\n";
  std::cout << "written\n";
  return 0;
}
