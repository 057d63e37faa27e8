#include <cassert>
#include <iostream>

#include "pvkit/cocycle.hpp"
#include "pvkit/dcsa.hpp"
#include "pvkit/hopf.hpp"
#include "pvkit/phi.hpp"
#include "pvkit/torsor.hpp"

using namespace pvkit;

int main() {
  // hopf: kummer k=2 passes, corrupted fails on can invertibility
  FinHopfGalois s2 = kummer_extension(2);
  HopfGaloisReport rep = hopf_galois_report(s2);
  std::cout << "kummer2 ok=" << rep.ok << " fail='" << rep.failure << "'\n";
  assert(rep.ok);

  FinHopfGalois bad = corrupted_extension(2);
  HopfGaloisReport brep = hopf_galois_report(bad);
  std::cout << "corrupted2 ok=" << brep.ok << " fail='" << brep.failure
            << "'\n";
  assert(!brep.ok);
  assert(brep.failure == "canonical map is not invertible");

  FinHopfGalois sp3 = split_extension(3);
  assert(hopf_galois_report(sp3).ok);

  // phi: rank-1 trivial module, extend along kummer2, coinvariants
  PhiObject m = trivial_object(1);
  ScalarExtension ms = extend_scalars(m, s2);
  FMat w = coinvariant_basis(ms);
  std::cout << "coinv cols=" << w.cols() << "\n";
  assert(w.cols() == 1);
  PhiObject back = coinvariants(ms);
  std::cout << "back d=" << back.d << " der=" << to_string(back.derivation(0, 0))
            << "\n";

  // cocycle: enumerate H^1(mu_2, G_m) at level 2
  GammaAction act;
  act.group = cyclic_group(2);
  act.target = GammaTarget{TargetKind::Gm, 1};
  act.level = 2;
  auto classes = enumerate_h1(act);
  std::cout << "h1(mu2,Gm) classes=" << classes.size() << "\n";
  assert(classes.size() == 2);
  for (const auto& c : classes) assert(is_cocycle(c, act));

  // construction_G on the nontrivial class, ambient = trivial rank 1 x S
  const Cocycle* nontriv = nullptr;
  for (const auto& c : classes)
    if (!(c.values[1](0, 0) == CycloNum(1))) nontriv = &c;
  assert(nontriv);
  PhiObject tw = construction_G(*nontriv, act, ms);
  std::cout << "twisted derivation=" << to_string(tw.derivation(0, 0)) << "\n";

  // full F(G(a)) == a roundtrip
  TwistedFormDesc tf = twisted_form_from_cocycle(*nontriv, act, ms);
  Cocycle rec = construction_F(tf, act);
  auto eq = are_equivalent(rec, *nontriv, act);
  std::cout << "F(G(a)) ~ a decision=" << static_cast<int>(eq.decision)
            << "\n";
  assert(eq.decision == Decision::yes);

  // dcsa: closed form vs oracle on the spec example
  FMat u(2, 2);
  u(0, 0) = RatFunc::x();
  u(1, 1) = RatFunc(1);
  GaugeWitness wu(u);
  DeltaCSA p0(FMat(2, 2));
  DeltaCSA q = pgl_gauge(p0, wu);
  std::cout << "Q = diag(" << to_string(q.P(0, 0)) << ", " << to_string(q.P(1, 1))
            << ")\n";
  assert(iso_witness_check(p0, q, wu));
  assert(!iso_witness_check(p0, p0, wu));
  assert(torsor_iso_check(to_pgl_torsor(q), to_pgl_torsor(p0), ad_witness(wu)));

  SplitReport sr = splitting_degree(q);
  std::cout << "split degree=" << sr.degree << " bound=" << sr.is_bound
            << " group=" << (sr.group ? sr.group->name() : "?") << "\n";

  // torsor basics
  DiffTorsorGLn y = from_module(adjoint_system(q).sys);
  assert(is_trivial_torsor(y) == TriState::yes ||
         is_trivial_torsor(y) == TriState::no);

  std::cout << "smoke ok\n";
  return 0;
}
