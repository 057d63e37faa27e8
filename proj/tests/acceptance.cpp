// Acceptance gate: one pass/fail line per criterion, exit code equals the
// number of failed criteria. Each criterion carries a pinned wall-clock
// budget; a criterion passes only if its checks hold AND it beats the budget.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pvkit/classify.hpp"
#include "pvkit/cocycle.hpp"
#include "pvkit/dcsa.hpp"
#include "pvkit/linsys.hpp"
#include "pvkit/phi.hpp"
#include "testutil.hpp"

#ifndef PVKIT_BIN
#error "PVKIT_BIN must point at the command-line binary"
#endif
#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must point at the fixture corpus"
#endif
#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must point at the golden outputs"
#endif

using namespace pvkit;
using testutil::fmat;

namespace {

// ---------------------------------------------------------------- helpers

RatFunc rand_ratfunc(std::mt19937_64& rng, int num_deg, int den_deg) {
  CycloNum i4 = root_of_unity(4, 4);
  auto rand_poly = [&](int maxdeg) {
    std::vector<CycloNum> cs;
    int d = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    for (int i = 0; i <= d; ++i) {
      long c = static_cast<long>(rng() % 9) - 4;
      cs.push_back(CycloNum(c) * i4.pow(static_cast<long>(rng() % 4)));
    }
    return RatFunc(Poly(std::move(cs)));
  };
  RatFunc num = rand_poly(num_deg);
  RatFunc den = rand_poly(den_deg);
  while (den.is_zero()) den = rand_poly(den_deg);
  return num / den;
}

GammaAction mu_to_gm(long k) {
  GammaAction act;
  act.group = cyclic_group(k);
  act.target = {TargetKind::Gm, 1};
  act.level = k;
  return act;
}

bool descent_ok(const PhiObject& m, const FinHopfGalois& s,
                std::string& detail) {
  ScalarExtension ext = extend_scalars(m, s);
  FMat w = coinvariant_basis(ext);
  if (static_cast<long>(w.cols()) != m.d) {
    detail = "coinvariant dimension mismatch";
    return false;
  }
  PhiObject n0 = restrict_extension(ext, w);
  auto iota = solve(w, unit_embedding(ext));
  if (!iota || !try_inverse(*iota) || !is_phi_morphism(*iota, m, n0)) {
    detail = "unit embedding is not an isomorphism";
    return false;
  }
  FMat mu = descent_mult_map(ext, w);
  if (!try_inverse(mu)) {
    detail = "multiplication map is singular";
    return false;
  }
  if (!is_phi_ext_morphism(mu, extend_scalars(n0, s), ext)) {
    detail = "multiplication map is not an extended morphism";
    return false;
  }
  return true;
}

// Conjugation by u carries delta_b into delta_a, checked on every matrix
// unit. This is the definitional oracle the closed-form witness relation
// must agree with.
bool intertwine_oracle(const DeltaCSA& a, const DeltaCSA& b,
                       const GaugeWitness& u) {
  std::size_t n = a.P.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FMat e(n, n);
      e(i, j) = RatFunc(1);
      FMat lhs = apply_delta(a, u.P * e * u.Pinv);
      FMat rhs = u.P * apply_delta(b, e) * u.Pinv;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = std::string(PVKIT_BIN);
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

// ---------------------------------------------------------------- criteria

bool crit1_derivation_axioms(std::string& detail) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    RatFunc f = rand_ratfunc(rng, 8, 8);
    RatFunc g = rand_ratfunc(rng, 8, 8);
    if (!(derive(f + g) == derive(f) + derive(g))) {
      detail = "additivity failed at trial " + std::to_string(trial);
      return false;
    }
    if (!(derive(f * g) == derive(f) * g + f * derive(g))) {
      detail = "Leibniz failed at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool crit2_gauge_groupoid(std::string& detail) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 3;
    int adeg = trial % 5;
    LinSys a(testutil::rand_fmat(rng, n, n, 1, adeg));
    GaugeWitness p(testutil::rand_invertible(rng, n, 1, 1));
    GaugeWitness q(testutil::rand_invertible(rng, n, 1, 1));
    GaugeWitness qp(q.P * p.P, p.Pinv * q.Pinv);
    if (!(gauge(gauge(a, p), q).A == gauge(a, qp).A)) {
      detail = "composition failed at trial " + std::to_string(trial);
      return false;
    }
    if (!(gauge(gauge(a, p), p.inverse_witness()).A == a.A)) {
      detail = "inverse failed at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool crit3_rank1_table(std::string& detail) {
  const char* inputs[7] = {"0", "1/x", "2/x", "1/(2*x)", "2/(3*x)", "1",
                           "1/x^2"};
  const char* expected[7] = {"trivial", "trivial", "trivial", "mu(2)",
                             "mu(3)", "G_m", "G_m"};
  for (int i = 0; i < 7; ++i) {
    DiagGroup g = rank1_group(parse(inputs[i]));
    std::string got = g.is_trivial() ? "trivial" : g.name();
    if (got != expected[i]) {
      detail = std::string("a = ") + inputs[i] + " expected " + expected[i] +
               " got " + got;
      return false;
    }
  }
  return true;
}

bool crit4_lattice_box(std::string& detail) {
  std::vector<std::vector<RatFunc>> tuples = {
      {parse("1/(2*x)")},
      {parse("1"), parse("1/(2*x)")},
      {parse("0"), parse("0"), parse("0")},
  };
  for (const auto& as : tuples) {
    CharLattice lat = char_lattice(as);
    std::size_t n = as.size();
    for (const auto& bv : lat.basis) {
      RatFunc comb;
      for (std::size_t i = 0; i < n; ++i)
        comb = comb + RatFunc(CycloNum(Rational(bv[i]))) * as[i];
      if (!is_log_derivative(comb).has_value()) {
        detail = "a lattice basis vector fails the direct test";
        return false;
      }
    }
    std::vector<long> m(n, -5);
    for (;;) {
      RatFunc comb;
      for (std::size_t i = 0; i < n; ++i)
        comb = comb + RatFunc(m[i]) * as[i];
      bool direct = is_log_derivative(comb).has_value();
      std::vector<Integer> mi;
      for (long v : m) mi.emplace_back(v);
      if (direct != lattice_contains(lat, mi)) {
        detail = "box point disagrees with the computed lattice";
        return false;
      }
      std::size_t pos = 0;
      while (pos < n && m[pos] == 5) m[pos++] = -5;
      if (pos == n) break;
      ++m[pos];
    }
  }
  return true;
}

bool crit5_descent_roundtrip(std::string& detail) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 50; ++trial) {
    long k = 2 + trial % 3;
    std::size_t d = 1 + trial % 4;
    FMat dm = testutil::rand_fmat(rng, d, d, k, 1);
    std::string why;
    if (!descent_ok(module_object(dm), kummer_extension(k), why)) {
      detail = "trial " + std::to_string(trial) + " (k=" + std::to_string(k) +
               ", d=" + std::to_string(d) + "): " + why;
      return false;
    }
  }
  return true;
}

bool crit6_canonical_map(std::string& detail) {
  for (long k : {2L, 3L, 4L}) {
    if (!try_inverse(can_map(kummer_extension(k)))) {
      detail = "canonical map singular for the order-" + std::to_string(k) +
               " Kummer extension";
      return false;
    }
  }
  if (!try_inverse(can_map(split_extension(3)))) {
    detail = "canonical map singular for the split extension";
    return false;
  }
  if (try_inverse(can_map(corrupted_extension(2)))) {
    detail = "canonical map unexpectedly invertible for the corrupted "
             "coaction";
    return false;
  }
  return true;
}

bool crit7_h1_counting(std::string& detail) {
  for (long k = 2; k <= 6; ++k) {
    GammaAction act = mu_to_gm(k);
    std::vector<Cocycle> classes = enumerate_h1(act);
    if (classes.size() != static_cast<std::size_t>(k)) {
      detail = "|H1(mu_" + std::to_string(k) + ", G_m)| = " +
               std::to_string(classes.size()) + ", expected " +
               std::to_string(k);
      return false;
    }
    // Cross-pipeline agreement: the rank-1 systems y' = (j/(kx)) y fall
    // into exactly as many gauge classes as the enumeration found.
    std::vector<RatFunc> reps;
    for (long j = 0; j < k; ++j) {
      std::string e = std::to_string(j) + "/(" + std::to_string(k) + "*x)";
      reps.push_back(parse(e));
    }
    long distinct = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      bool fresh = true;
      for (std::size_t j = 0; j < i; ++j)
        if (is_log_derivative(reps[i] - reps[j]).has_value()) fresh = false;
      if (fresh) ++distinct;
    }
    if (distinct != k) {
      detail = "rank-1 gauge classes for k=" + std::to_string(k) + ": " +
               std::to_string(distinct) + ", expected " + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool crit8_fg_inverse(std::string& detail) {
  for (long k = 2; k <= 6; ++k) {
    GammaAction act = mu_to_gm(k);
    FinHopfGalois s = kummer_extension(k);
    ScalarExtension ambient = extend_scalars(trivial_object(1), s);
    std::size_t idx = 0;
    for (const Cocycle& a : enumerate_h1(act)) {
      TwistedFormDesc tf = twisted_form_from_cocycle(a, act, ambient);
      Cocycle back = construction_F(tf, act);
      if (!is_cocycle(back, act) ||
          are_equivalent(back, a, act).decision != Decision::yes) {
        detail = "F(G(a)) not equivalent to a for class " +
                 std::to_string(idx) + " at k=" + std::to_string(k);
        return false;
      }
      PhiObject m2 = construction_G(back, act, ambient);
      if (m2.d != 1 || tf.twisted.d != 1) {
        detail = "unexpected rank in the twisted forms";
        return false;
      }
      RatFunc diff = tf.twisted.derivation(0, 0) - m2.derivation(0, 0);
      auto wit = is_log_derivative(diff);
      if (!wit) {
        detail = "G(F(T)) not gauge equivalent to T for class " +
                 std::to_string(idx) + " at k=" + std::to_string(k);
        return false;
      }
      FMat gm(1, 1);
      gm(0, 0) = *wit;
      if (!is_phi_morphism(gm, module_object(tf.twisted.derivation),
                           module_object(m2.derivation))) {
        detail = "log-derivative witness is not a module morphism";
        return false;
      }
      ++idx;
    }
  }
  return true;
}

bool crit9_unipotent_vanishing(std::string& detail) {
  for (long k = 2; k <= 5; ++k) {
    GammaAction ga;
    ga.group = cyclic_group(k);
    ga.target = {TargetKind::Ga, 1};
    std::vector<Cocycle> z = enumerate_h1(ga);
    if (z.size() != 1) {
      detail = "|H1(mu_" + std::to_string(k) + ", G_a)| = " +
               std::to_string(z.size()) + ", expected 1";
      return false;
    }
    for (const CMat& v : z[0].values)
      if (!v(0, 0).is_zero()) {
        detail = "the additive class is not the zero cocycle";
        return false;
      }
  }
  return true;
}

bool crit10_dcsa_suite(std::string& detail) {
  std::mt19937_64 rng(1010);
  auto rand_dcsa = [&](std::size_t n) {
    return make_traceless(testutil::rand_fmat(rng, n, n, 1, 0));
  };
  auto rand_witness = [&](std::size_t n) {
    return GaugeWitness(testutil::rand_invertible(rng, n, 1, 0));
  };

  // Leibniz rule on 200 random instances.
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 2;
    DeltaCSA a = rand_dcsa(n);
    FMat x = testutil::rand_fmat(rng, n, n, 1, 0);
    FMat y = testutil::rand_fmat(rng, n, n, 1, 0);
    if (!(apply_delta(a, x * y) ==
          apply_delta(a, x) * y + x * apply_delta(a, y))) {
      detail = "Leibniz failed at trial " + std::to_string(trial);
      return false;
    }
  }

  // Closed-form witness relation vs the basis-wise intertwining oracle.
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = (trial % 3 == 2) ? 3 : 2;
    DeltaCSA p = rand_dcsa(n);
    GaugeWitness u = rand_witness(n);
    if (trial % 2 == 0) {
      DeltaCSA q = pgl_gauge(p, u);
      if (!intertwine_oracle(p, q, u) || !iso_witness_check(p, q, u)) {
        detail = "oracle and closed form disagree on a gauge pair, trial " +
                 std::to_string(trial);
        return false;
      }
    } else {
      DeltaCSA b = rand_dcsa(n);
      if (intertwine_oracle(p, b, u) != iso_witness_check(p, b, u)) {
        detail = "oracle and closed form disagree on a random pair, trial " +
                 std::to_string(trial);
        return false;
      }
    }
  }

  // Diagonal splitting-degree corpus, including the n = 3 analogues, plus
  // the non-diagonal upper bound. Everything must sit within n^2 - 1.
  struct DiagCase {
    std::size_t n;
    std::vector<const char*> entries;
    const char* group;
    long degree;
  };
  std::vector<DiagCase> corpus = {
      {2, {"0", "0", "0", "0"}, "trivial", 0},
      {2, {"1/(2*x)", "0", "0", "-1/(2*x)"}, "trivial", 0},
      {2, {"1/(4*x)", "0", "0", "-1/(4*x)"}, "mu(2)", 0},
      {2, {"1/2", "0", "0", "-1/2"}, "G_m", 1},
      {3, {"0", "0", "0", "0", "1/(2*x)", "0", "0", "0", "-1/(2*x)"},
       "mu(2)", 0},
      {3, {"1", "0", "0", "0", "1/x", "0", "0", "0", "-1-1/x"}, "G_m", 1},
      {3, {"1", "0", "0", "0", "1", "0", "0", "0", "-2"}, "G_m", 1},
  };
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const DiagCase& dc = corpus[c];
    std::vector<RatFunc> es;
    for (const char* e : dc.entries) es.push_back(parse(e));
    DeltaCSA a{FMat(dc.n, dc.n, std::move(es))};
    SplitReport rep = splitting_degree(a);
    if (!rep.group.has_value()) {
      detail = "diagonal corpus case " + std::to_string(c) +
               " produced no group";
      return false;
    }
    std::string got = rep.group->is_trivial() ? "trivial" : rep.group->name();
    if (got != dc.group || rep.degree != dc.degree || rep.is_bound) {
      detail = "corpus case " + std::to_string(c) + ": got " + got +
               " degree " + std::to_string(rep.degree);
      return false;
    }
    long cap = static_cast<long>(dc.n * dc.n) - 1;
    if (rep.degree > cap) {
      detail = "degree exceeds n^2 - 1 on corpus case " + std::to_string(c);
      return false;
    }
  }
  DeltaCSA nd(fmat(2, 2, {"0", "1", "1/x", "0"}));
  SplitReport rep = splitting_degree(nd);
  if (rep.group.has_value() || !rep.is_bound || rep.degree != 3) {
    detail = "non-diagonal case must report the bound n^2 - 1 = 3";
    return false;
  }
  return true;
}

bool crit11_cli_golden(std::string& detail) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/cases.txt");
  if (!in.good()) {
    detail = "cannot open the golden case manifest";
    return false;
  }
  int checked = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
      if (ch == '|') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    if (parts.size() < 3) {
      detail = "malformed case line: " + line;
      return false;
    }
    std::vector<std::string> args;
    for (std::size_t i = 2; i < parts.size(); ++i) {
      std::string a = parts[i];
      const std::string tok = "@F/";
      if (a.rfind(tok, 0) == 0)
        a = std::string(FIXTURE_DIR) + "/" + a.substr(tok.size());
      args.push_back(a);
    }
    RunResult r = run_cli(args);
    if (r.exit_code != std::stoi(parts[1])) {
      detail = parts[0] + ": exit " + std::to_string(r.exit_code) +
               ", expected " + parts[1];
      return false;
    }
    std::string want = read_file(std::string(GOLDEN_DIR) + "/" + parts[0] +
                                 ".txt");
    if (r.out != want) {
      detail = parts[0] + ": output is not byte-identical to the golden file";
      return false;
    }
    ++checked;
  }
  if (checked < 30) {
    detail = "golden corpus unexpectedly small: " + std::to_string(checked);
    return false;
  }
  return true;
}

struct Criterion {
  int number;
  const char* label;
  double budget_s;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "derivation axioms on 1000 random pairs", 5.0,
       crit1_derivation_axioms},
      {2, "gauge groupoid laws on 200 random triples", 10.0,
       crit2_gauge_groupoid},
      {3, "rank-1 classifier table", 1.0, crit3_rank1_table},
      {4, "character lattice box completeness", 10.0, crit4_lattice_box},
      {5, "descent roundtrip on 50 random modules", 30.0,
       crit5_descent_roundtrip},
      {6, "canonical map invertibility corpus", 1.0, crit6_canonical_map},
      {7, "H1(mu_k, G_m) counting and cross-check", 10.0, crit7_h1_counting},
      {8, "twisting constructions invert each other", 20.0, crit8_fg_inverse},
      {9, "H1(mu_k, G_a) vanishing", 1.0, crit9_unipotent_vanishing},
      {10, "matrix derivation suite and splitting degrees", 30.0,
       crit10_dcsa_suite},
      {11, "command-line golden corpus, byte-exact", 5.0, crit11_cli_golden},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    bool in_budget = secs < c.budget_s;
    bool pass = ok && in_budget;
    std::printf("%s  %2d. %s (%.2fs of %.0fs budget)\n",
                pass ? "PASS" : "FAIL", c.number, c.label, secs, c.budget_s);
    if (!pass) {
      if (!ok)
        std::printf("      %s\n",
                    detail.empty() ? "checks failed" : detail.c_str());
      if (!in_budget) std::printf("      exceeded the time budget\n");
      ++failures;
    }
  }
  return failures;
}
