// pvkit: exact differential-algebra toolkit over Q(zeta_N)(x).
//
// Usage: pvkit <command> [--input FILE ...] [--json] [--zeta-level N] [expr...]
// Exit codes: 0 = success, 1 = mathematically negative or undecided answer,
// 2 = input error (diagnostics on stderr). Output is byte-deterministic for
// identical inputs; every report ends with a machine-readable JSON block,
// and --json restricts output to that block.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvkit/pvkit.hpp"

namespace {

using pvkit::Json;

struct Ctx {
  std::vector<std::string> inputs;
  std::vector<std::string> exprs;
  bool json_only = false;
  long level = 1;

  int code = 0;
  std::vector<std::string> lines;
  Json machine;
};

Json load_input(const Ctx& ctx, std::size_t i, const std::string& what) {
  if (i >= ctx.inputs.size())
    throw pvkit::InputError("missing --input file #" + std::to_string(i + 1) +
                            " (" + what + ")");
  return pvkit::load_json(ctx.inputs[i]);
}

template <typename F>
auto in_file(const Ctx& ctx, std::size_t i, F&& f)
    -> decltype(f(Json{}, long{})) {
  Json j = load_input(ctx, i, "see command help");
  long level = pvkit::json_level(j, ctx.level);
  try {
    return f(j, level);
  } catch (const pvkit::Error& e) {
    throw pvkit::InputError(ctx.inputs[i] + ": " + e.what());
  }
}

pvkit::FMat load_fmat(const Ctx& ctx, std::size_t i) {
  return in_file(ctx, i, [](const Json& j, long level) {
    return pvkit::json_to_fmat(j, level);
  });
}

pvkit::DeltaCSA load_dcsa(const Ctx& ctx, std::size_t i) {
  return in_file(ctx, i, [](const Json& j, long level) {
    pvkit::FMat p = pvkit::json_to_fmat(j, level);
    if (j.contains("traceless") && j["traceless"].get<bool>())
      return pvkit::DeltaCSA(p);
    return pvkit::make_traceless(p);
  });
}

pvkit::GaugeWitness load_witness(const Ctx& ctx, std::size_t i) {
  pvkit::FMat p = load_fmat(ctx, i);
  if (!pvkit::try_inverse(p))
    throw pvkit::InputError(ctx.inputs[i] + ": witness not invertible");
  return pvkit::GaugeWitness(p);
}

std::string cmat_line(const pvkit::CMat& v) {
  if (v.rows() == 1 && v.cols() == 1) return pvkit::to_string(v(0, 0));
  std::string out = "[";
  for (std::size_t i = 0; i < v.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < v.cols(); ++j) {
      if (j) out += ", ";
      out += pvkit::to_string(v(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string cocycle_line(const pvkit::Cocycle& a,
                         const pvkit::FinGroupHopf& g) {
  std::string out;
  for (std::size_t s = 0; s < a.values.size(); ++s) {
    if (s) out += ", ";
    out += g.elements[s] + " -> " + cmat_line(a.values[s]);
  }
  return out;
}

std::string degree_line(const pvkit::SplitReport& rep) {
  if (rep.is_bound)
    return "splitting degree <= " + std::to_string(rep.degree) + " (bound)";
  return "splitting degree " + std::to_string(rep.degree);
}

void cmd_gauge_check(Ctx& ctx) {
  pvkit::LinSys a(load_fmat(ctx, 0)), b(load_fmat(ctx, 1));
  pvkit::GaugeWitness p = load_witness(ctx, 2);
  bool ok = pvkit::is_gauge_witness(a, b, p);
  ctx.code = ok ? 0 : 1;
  ctx.lines = {std::string("gauge witness: ") + (ok ? "valid" : "invalid")};
  ctx.machine = {{"command", "gauge-check"}, {"valid", ok}};
}

void cmd_rank1_classify(Ctx& ctx) {
  pvkit::RatFunc a;
  if (!ctx.exprs.empty()) {
    a = pvkit::parse(ctx.exprs[0], ctx.level);
  } else {
    a = in_file(ctx, 0, [](const Json& j, long level) {
      if (!j.contains("a"))
        throw pvkit::InputError("rank1 input needs key \"a\"");
      return pvkit::parse(j["a"].get<std::string>(), level);
    });
  }
  pvkit::DiagGroup g = pvkit::rank1_group(a);
  ctx.lines = {g.name() + ", splitting degree " +
               std::to_string(g.dimension())};
  ctx.machine = {{"command", "rank1-classify"},
                 {"group", pvkit::diag_group_to_json(g)},
                 {"degree", g.dimension()}};
}

void cmd_diag_group(Ctx& ctx) {
  std::vector<pvkit::RatFunc> as;
  if (!ctx.exprs.empty()) {
    for (const std::string& e : ctx.exprs)
      as.push_back(pvkit::parse(e, ctx.level));
  } else {
    as = in_file(ctx, 0, [](const Json& j, long level) {
      if (!j.contains("entries"))
        throw pvkit::InputError("diag input needs key \"entries\"");
      std::vector<pvkit::RatFunc> out;
      for (const Json& e : j["entries"])
        out.push_back(pvkit::parse(e.get<std::string>(), level));
      return out;
    });
  }
  pvkit::DiagGroup g = pvkit::diag_group(as);
  ctx.lines = {g.name() + ", splitting degree " +
               std::to_string(g.dimension())};
  ctx.machine = {{"command", "diag-group"},
                 {"group", pvkit::diag_group_to_json(g)},
                 {"degree", g.dimension()}};
}

void cmd_torsor_iso(Ctx& ctx) {
  pvkit::DiffTorsorGLn y = pvkit::from_module(pvkit::LinSys(load_fmat(ctx, 0)));
  pvkit::DiffTorsorGLn z = pvkit::from_module(pvkit::LinSys(load_fmat(ctx, 1)));
  pvkit::GaugeWitness p = load_witness(ctx, 2);
  bool ok = pvkit::torsor_iso_check(y, z, p);
  ctx.code = ok ? 0 : 1;
  ctx.lines = {std::string("torsor isomorphism: ") +
               (ok ? "valid" : "invalid")};
  ctx.machine = {{"command", "torsor-iso"}, {"valid", ok}};
}

void cmd_split_report(Ctx& ctx) {
  pvkit::DiffTorsorGLn y = pvkit::from_module(pvkit::LinSys(load_fmat(ctx, 0)));
  pvkit::SplitReport rep = pvkit::splitting_report(y);
  ctx.lines.push_back(degree_line(rep));
  if (rep.group) ctx.lines.push_back("group: " + rep.group->name());
  ctx.lines.push_back("note: " + rep.minimal_field_note);
  ctx.machine = pvkit::split_report_to_json(rep);
  ctx.machine["command"] = "split-report";
}

void cmd_hopf_check(Ctx& ctx) {
  pvkit::FinHopfGalois s = in_file(ctx, 0, [](const Json& j, long level) {
    return pvkit::json_to_hopf(j, level);
  });
  pvkit::HopfGaloisReport rep = pvkit::hopf_galois_report(s);
  ctx.code = rep.ok ? 0 : 1;
  ctx.lines = {rep.ok ? std::string("delta-Hopf-Galois: yes")
                      : "delta-Hopf-Galois: no (" + rep.failure + ")"};
  ctx.machine = {{"command", "hopf-check"},
                 {"ok", rep.ok},
                 {"failure", rep.failure}};
}

void cmd_descent_roundtrip(Ctx& ctx) {
  pvkit::PhiObject m = in_file(ctx, 0, [](const Json& j, long level) {
    return pvkit::json_to_phi(j, level);
  });
  pvkit::FinHopfGalois s = in_file(ctx, 1, [](const Json& j, long level) {
    return pvkit::json_to_hopf(j, level);
  });
  std::string reason;
  pvkit::ScalarExtension ext = pvkit::extend_scalars(m, s);
  pvkit::FMat w = pvkit::coinvariant_basis(ext);
  if (static_cast<long>(w.cols()) != m.d) {
    reason = "coinvariant dimension " + std::to_string(w.cols()) +
             " differs from " + std::to_string(m.d);
  } else {
    pvkit::PhiObject n0 = pvkit::restrict_extension(ext, w);
    auto iota = pvkit::solve(w, pvkit::unit_embedding(ext));
    if (!iota || !pvkit::try_inverse(*iota) ||
        !pvkit::is_phi_morphism(*iota, m, n0)) {
      reason = "canonical embedding is not a Phi-isomorphism";
    } else {
      pvkit::FMat mu = pvkit::descent_mult_map(ext, w);
      pvkit::ScalarExtension n0s = pvkit::extend_scalars(n0, s);
      if (!pvkit::try_inverse(mu) || !pvkit::is_phi_ext_morphism(mu, n0s, ext))
        reason = "multiplication map is not a Phi_S-isomorphism";
    }
  }
  bool ok = reason.empty();
  ctx.code = ok ? 0 : 1;
  ctx.lines = {ok ? "descent roundtrip: ok (dimension " + std::to_string(m.d) +
                        ")"
                  : "descent roundtrip: failed (" + reason + ")"};
  ctx.machine = {{"command", "descent-roundtrip"},
                 {"ok", ok},
                 {"reason", reason}};
}

void cmd_h1_enumerate(Ctx& ctx) {
  pvkit::GammaAction act = in_file(ctx, 0, [](const Json& j, long level) {
    return pvkit::json_to_action(j, level);
  });
  std::vector<pvkit::Cocycle> classes = pvkit::enumerate_h1(act);
  ctx.lines.push_back(std::to_string(classes.size()) + " classes");
  Json arr = Json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ctx.lines.push_back("class " + std::to_string(i) + ": " +
                        cocycle_line(classes[i], act.group));
    arr.push_back(pvkit::cocycle_to_json(classes[i]));
  }
  ctx.machine = {{"command", "h1-enumerate"},
                 {"count", classes.size()},
                 {"classes", std::move(arr)}};
}

void cmd_h1_check(Ctx& ctx) {
  pvkit::GammaAction act = in_file(ctx, 0, [](const Json& j, long level) {
    return pvkit::json_to_action(j, level);
  });
  pvkit::Cocycle a = in_file(ctx, 1, [](const Json& j, long level) {
    return pvkit::json_to_cocycle(j, level);
  });
  if (ctx.inputs.size() < 3) {
    bool ok = pvkit::is_cocycle(a, act);
    ctx.code = ok ? 0 : 1;
    ctx.lines = {std::string("cocycle: ") + (ok ? "valid" : "invalid")};
    ctx.machine = {{"command", "h1-check"}, {"valid", ok}};
    return;
  }
  pvkit::Cocycle b = in_file(ctx, 2, [](const Json& j, long level) {
    return pvkit::json_to_cocycle(j, level);
  });
  pvkit::EquivalenceResult r = pvkit::are_equivalent(a, b, act);
  std::string verdict = r.decision == pvkit::Decision::yes        ? "yes"
                        : r.decision == pvkit::Decision::no       ? "no"
                                                                  : "undecided";
  ctx.code = r.decision == pvkit::Decision::yes ? 0 : 1;
  ctx.lines = {"equivalent: " + verdict};
  if (r.witness) ctx.lines.push_back("witness: " + cmat_line(*r.witness));
  ctx.machine = {{"command", "h1-check"}, {"equivalent", verdict}};
  if (r.witness) ctx.machine["witness"] = pvkit::cmat_to_json(*r.witness);
}

void cmd_h1_twist(Ctx& ctx) {
  pvkit::GammaAction act = in_file(ctx, 0, [](const Json& j, long level) {
    return pvkit::json_to_action(j, level);
  });
  pvkit::Cocycle a = in_file(ctx, 1, [](const Json& j, long level) {
    return pvkit::json_to_cocycle(j, level);
  });
  pvkit::PhiObject base = in_file(ctx, 2, [](const Json& j, long level) {
    return pvkit::json_to_phi(j, level);
  });
  pvkit::FinHopfGalois s = in_file(ctx, 3, [](const Json& j, long level) {
    return pvkit::json_to_hopf(j, level);
  });
  pvkit::ScalarExtension ambient = pvkit::extend_scalars(base, s);
  pvkit::TwistedFormDesc tf = pvkit::twisted_form_from_cocycle(a, act, ambient);
  ctx.lines = {"twisted form: dimension " + std::to_string(tf.twisted.d)};
  ctx.machine = {{"command", "h1-twist"},
                 {"twisted", pvkit::phi_to_json(tf.twisted)},
                 {"iso", pvkit::fmat_to_json(tf.iso)}};
}

void cmd_h1_untwist(Ctx& ctx) {
  pvkit::GammaAction act = in_file(ctx, 0, [](const Json& j, long level) {
    return pvkit::json_to_action(j, level);
  });
  pvkit::TwistedFormDesc tf = in_file(ctx, 1, [](const Json& j, long level) {
    return pvkit::json_to_twisted_form(j, level);
  });
  pvkit::Cocycle a = pvkit::construction_F(tf, act);
  ctx.lines = {"cocycle: " + cocycle_line(a, act.group)};
  ctx.machine = {{"command", "h1-untwist"},
                 {"cocycle", pvkit::cocycle_to_json(a)}};
}

void cmd_dcsa_check_iso(Ctx& ctx) {
  pvkit::DeltaCSA a = load_dcsa(ctx, 0);
  pvkit::DeltaCSA b = load_dcsa(ctx, 1);
  pvkit::GaugeWitness u = load_witness(ctx, 2);
  bool ok = pvkit::iso_witness_check(a, b, u);
  ctx.code = ok ? 0 : 1;
  ctx.lines = {std::string("delta-CSA isomorphism: ") +
               (ok ? "valid" : "invalid")};
  ctx.machine = {{"command", "dcsa-check-iso"}, {"valid", ok}};
}

void cmd_dcsa_adjoint(Ctx& ctx) {
  pvkit::DeltaCSA a = load_dcsa(ctx, 0);
  pvkit::AdjointSys sys = pvkit::adjoint_system(a);
  ctx.lines = {"adjoint system: " + std::to_string(sys.n()) + "x" +
               std::to_string(sys.n())};
  ctx.machine = {{"command", "dcsa-adjoint"},
                 {"matrix", pvkit::fmat_to_json(sys.sys.A)}};
}

void cmd_dcsa_split_degree(Ctx& ctx) {
  pvkit::DeltaCSA a = load_dcsa(ctx, 0);
  pvkit::SplitReport rep = pvkit::splitting_degree(a);
  ctx.lines.push_back(degree_line(rep));
  if (rep.group) ctx.lines.push_back("group: " + rep.group->name());
  ctx.lines.push_back("note: " + rep.minimal_field_note);
  ctx.machine = pvkit::split_report_to_json(rep);
  ctx.machine["command"] = "dcsa-split-degree";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact differential algebra over Q(zeta_N)(x)"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  app.add_option("--input", ctx.inputs, "input JSON file (repeatable)");
  app.add_flag("--json", ctx.json_only, "emit only the machine JSON block");
  app.add_option("--zeta-level", ctx.level,
                 "cyclotomic level for inputs without a zeta_level key")
      ->check(CLI::PositiveNumber);

  struct Cmd {
    const char* name;
    const char* help;
    void (*run)(Ctx&);
    bool takes_exprs;
  };
  const std::vector<Cmd> cmds = {
      {"gauge-check", "check a gauge witness between two systems (A, B, P)",
       cmd_gauge_check, false},
      {"rank1-classify", "classify a rank-1 system y' = a y", cmd_rank1_classify,
       true},
      {"diag-group",
       "diagonalizable group of a diagonal system (entries a_1..a_n)",
       cmd_diag_group, true},
      {"torsor-iso", "check a torsor isomorphism witness (Y, Z, P)",
       cmd_torsor_iso, false},
      {"split-report", "splitting degree report for a torsor matrix",
       cmd_split_report, false},
      {"hopf-check", "validate a delta-Hopf-Galois extension", cmd_hopf_check,
       false},
      {"descent-roundtrip",
       "verify coinvariant descent for an object and an extension (M, S)",
       cmd_descent_roundtrip, false},
      {"h1-enumerate", "enumerate H^1 classes for a finite action",
       cmd_h1_enumerate, false},
      {"h1-check", "validate a cocycle, or decide equivalence of two",
       cmd_h1_check, false},
      {"h1-twist", "build the twisted form of a cocycle (act, a, M, S)",
       cmd_h1_twist, false},
      {"h1-untwist", "extract the cocycle of a twisted form (act, tf)",
       cmd_h1_untwist, false},
      {"dcsa-check-iso",
       "check a delta-CSA isomorphism witness (P, Q, u)", cmd_dcsa_check_iso,
       false},
      {"dcsa-adjoint", "adjoint system of a delta-CSA", cmd_dcsa_adjoint,
       false},
      {"dcsa-split-degree", "splitting degree of a delta-CSA",
       cmd_dcsa_split_degree, false},
  };

  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.takes_exprs)
      sub->add_option("expr", ctx.exprs, "expression argument(s)");
    void (*run)(Ctx&) = c.run;
    sub->callback([&ctx, run]() { run(ctx); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const pvkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!ctx.json_only)
    for (const std::string& line : ctx.lines) std::cout << line << "\n";
  std::cout << ctx.machine.dump(2) << "\n";
  return ctx.code;
}
