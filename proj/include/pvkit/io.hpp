#pragma once

// JSON input and output for fixtures and the CLI. All field entries are
// expression strings in the fieldcore grammar, parsed at a cyclotomic level
// taken from the file's "zeta_level" key (with a caller-supplied fallback).
// Matrices are written as {"n"| "rows"+"cols", "entries": [[string...]...]}.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvkit/cocycle.hpp"
#include "pvkit/dcsa.hpp"
#include "pvkit/parse.hpp"

namespace pvkit {

using Json = nlohmann::ordered_json;

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline long json_level(const Json& j, long fallback) {
  if (j.contains("zeta_level")) {
    if (!j["zeta_level"].is_number_integer() || j["zeta_level"].get<long>() < 1)
      throw InputError("zeta_level must be a positive integer");
    return j["zeta_level"].get<long>();
  }
  return fallback;
}

inline FMat json_to_fmat(const Json& j, long level) {
  if (!j.is_object() || !j.contains("entries"))
    throw InputError("matrix object must contain \"entries\"");
  std::size_t rows, cols;
  if (j.contains("n")) {
    rows = cols = j["n"].get<std::size_t>();
  } else {
    if (!j.contains("rows") || !j.contains("cols"))
      throw InputError("matrix object needs \"n\" or \"rows\"+\"cols\"");
    rows = j["rows"].get<std::size_t>();
    cols = j["cols"].get<std::size_t>();
  }
  const Json& e = j["entries"];
  if (!e.is_array() || e.size() != rows)
    throw InputError("matrix entries have the wrong number of rows");
  FMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols)
      throw InputError("matrix entries have the wrong number of columns");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = parse(e[i][c].get<std::string>(), level);
  }
  return m;
}

inline Json fmat_to_json(const FMat& m) {
  Json e = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    e.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(e);
  return out;
}

inline CMat json_to_cmat(const Json& j, long level) {
  FMat f = json_to_fmat(j, level);
  CMat m(f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t c = 0; c < f.cols(); ++c) {
      if (!f(i, c).is_zero() && !f(i, c).is_constant())
        throw InputError("entry is not a constant");
      m(i, c) = f(i, c).is_zero() ? CycloNum(0) : f(i, c).constant_value();
    }
  return m;
}

inline Json cmat_to_json(const CMat& m) {
  Json e = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    e.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(e);
  return out;
}

inline FinGroupHopf json_to_group(const Json& j) {
  if (j.is_object() && j.contains("cyclic"))
    return cyclic_group(j["cyclic"].get<long>());
  if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
    throw InputError("group object needs \"elements\" and \"table\"");
  std::vector<std::string> labels;
  for (const Json& l : j["elements"]) labels.push_back(l.get<std::string>());
  std::vector<std::vector<long>> table;
  for (const Json& row : j["table"]) {
    std::vector<long> r;
    for (const Json& v : row) r.push_back(v.get<long>());
    table.push_back(std::move(r));
  }
  return FinGroupHopf(std::move(labels), std::move(table));
}

inline Json group_to_json(const FinGroupHopf& g) {
  Json out;
  out["elements"] = g.elements;
  out["table"] = g.mult;
  return out;
}

inline FinHopfGalois json_to_hopf(const Json& j, long fallback_level) {
  long level = json_level(j, fallback_level);
  if (j.contains("kummer")) return kummer_extension(j["kummer"].get<long>());
  if (j.contains("split")) {
    if (j["split"].is_number_integer())
      return split_extension(j["split"].get<long>());
    return split_extension(json_to_group(j["split"]));
  }
  for (const char* key : {"group", "k", "mult", "derivation", "coaction"})
    if (!j.contains(key))
      throw InputError(std::string("extension object needs \"") + key + "\"");
  return FinHopfGalois(json_to_group(j["group"]), j["k"].get<long>(),
                       json_to_fmat(j["mult"], level),
                       json_to_fmat(j["derivation"], level),
                       json_to_fmat(j["coaction"], level));
}

inline PhiObject json_to_phi(const Json& j, long fallback_level) {
  long level = json_level(j, fallback_level);
  if (!j.contains("d") || !j.contains("derivation"))
    throw InputError("phi object needs \"d\" and \"derivation\"");
  PhiType type;
  if (j.contains("hopf_group")) type.hopf = json_to_group(j["hopf_group"]);
  if (j.contains("signatures"))
    for (const Json& sg : j["signatures"]) {
      if (!sg.is_array() || sg.size() != 4)
        throw InputError("signature must be an array of four integers");
      type.signatures.push_back(PhiSignature{sg[0].get<long>(),
                                             sg[1].get<long>(),
                                             sg[2].get<long>(),
                                             sg[3].get<long>()});
    }
  std::vector<FMat> maps;
  if (j.contains("maps"))
    for (const Json& m : j["maps"]) maps.push_back(json_to_fmat(m, level));
  return PhiObject(std::move(type), j["d"].get<long>(),
                   json_to_fmat(j["derivation"], level), std::move(maps));
}

inline Json phi_to_json(const PhiObject& m) {
  Json out;
  out["d"] = m.d;
  if (!m.type.signatures.empty()) {
    Json sgs = Json::array();
    for (const PhiSignature& sg : m.type.signatures)
      sgs.push_back(Json::array({sg.n1, sg.n2, sg.n3, sg.n4}));
    out["signatures"] = std::move(sgs);
  }
  out["derivation"] = fmat_to_json(m.derivation);
  if (!m.maps.empty()) {
    Json maps = Json::array();
    for (const FMat& mm : m.maps) maps.push_back(fmat_to_json(mm));
    out["maps"] = std::move(maps);
  }
  return out;
}

inline TargetKind json_to_target_kind(const std::string& s) {
  if (s == "Gm") return TargetKind::Gm;
  if (s == "Mu") return TargetKind::Mu;
  if (s == "Ga") return TargetKind::Ga;
  if (s == "DiagTorus") return TargetKind::DiagTorus;
  if (s == "GLm") return TargetKind::GLm;
  throw InputError("unknown target kind: " + s);
}

inline std::string target_kind_name(TargetKind k) {
  switch (k) {
    case TargetKind::Gm: return "Gm";
    case TargetKind::Mu: return "Mu";
    case TargetKind::Ga: return "Ga";
    case TargetKind::DiagTorus: return "DiagTorus";
    case TargetKind::GLm: return "GLm";
  }
  return "?";
}

inline GammaAction json_to_action(const Json& j, long fallback_level) {
  if (!j.contains("group") || !j.contains("target"))
    throw InputError("action object needs \"group\" and \"target\"");
  GammaAction act;
  act.group = json_to_group(j["group"]);
  act.target.kind = json_to_target_kind(j["target"].get<std::string>());
  act.target.m = j.contains("m") ? j["m"].get<long>() : 1;
  act.level = json_level(j, fallback_level);
  if (j.contains("exponents"))
    for (const Json& e : j["exponents"]) act.exponents.push_back(e.get<long>());
  if (j.contains("scales"))
    for (const Json& s : j["scales"]) {
      RatFunc v = parse(s.get<std::string>(), act.level);
      if (!v.is_zero() && !v.is_constant())
        throw InputError("scale is not a constant");
      act.scales.push_back(v.is_zero() ? CycloNum(0) : v.constant_value());
    }
  if (j.contains("conjugators"))
    for (const Json& c : j["conjugators"])
      act.conjugators.push_back(json_to_cmat(c, act.level));
  validate_action(act);
  return act;
}

inline Cocycle json_to_cocycle(const Json& j, long fallback_level) {
  long level = json_level(j, fallback_level);
  if (!j.contains("values"))
    throw InputError("cocycle object needs \"values\"");
  Cocycle a;
  for (const Json& v : j["values"]) a.values.push_back(json_to_cmat(v, level));
  return a;
}

inline Json cocycle_to_json(const Cocycle& a) {
  Json vals = Json::array();
  for (const CMat& v : a.values) vals.push_back(cmat_to_json(v));
  Json out;
  out["values"] = std::move(vals);
  return out;
}

inline TwistedFormDesc json_to_twisted_form(const Json& j,
                                            long fallback_level) {
  long level = json_level(j, fallback_level);
  for (const char* key : {"base", "twisted", "extension", "iso"})
    if (!j.contains(key))
      throw InputError(std::string("twisted form object needs \"") + key +
                       "\"");
  TwistedFormDesc tf;
  tf.base = json_to_phi(j["base"], level);
  tf.twisted = json_to_phi(j["twisted"], level);
  tf.s = json_to_hopf(j["extension"], level);
  tf.iso = json_to_fmat(j["iso"], level);
  validate_twisted_form(tf);
  return tf;
}

inline Json split_report_to_json(const SplitReport& rep) {
  Json out;
  out["degree"] = rep.degree;
  out["is_bound"] = rep.is_bound;
  if (rep.group) out["group"] = rep.group->name();
  out["note"] = rep.minimal_field_note;
  return out;
}

inline Json diag_group_to_json(const DiagGroup& g) {
  Json out;
  out["name"] = g.name();
  out["torus_rank"] = g.torus_rank;
  Json f = Json::array();
  for (const Integer& v : g.finite_factors) f.push_back(v.get_str());
  out["finite_factors"] = std::move(f);
  return out;
}

}  // namespace pvkit
