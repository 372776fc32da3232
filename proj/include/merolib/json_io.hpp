#pragma once

// JSON serialization for rings, presentations and reports. ordered_json
// keeps key order stable so identical configs produce byte-identical output.

#include "merolib/braid.hpp"
#include "merolib/ring.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mero::io {

using Json = nlohmann::ordered_json;
using exactalg::CoordinateRing;
using exactalg::LaurentPoly;
using exactalg::PreconditionError;

inline Json ring_to_json(const CoordinateRing& ring) {
  Json j;
  j["variables"] = ring.vars;
  Json rels = Json::array();
  for (const auto& r : ring.relations) rels.push_back(r.str());
  j["relations"] = rels;
  Json units = Json::array();
  for (const auto& u : ring.units) units.push_back(u.str());
  j["units"] = units;
  return j;
}

inline CoordinateRing ring_from_json(const Json& j) {
  CoordinateRing ring;
  ring.vars = j.at("variables").get<std::vector<std::string>>();
  if (j.contains("relations"))
    for (const auto& s : j.at("relations"))
      ring.relations.push_back(exactalg::parse_poly(s.get<std::string>(), ring.vars));
  if (j.contains("units"))
    for (const auto& s : j.at("units"))
      ring.units.push_back(exactalg::parse_poly(s.get<std::string>(), ring.vars));
  ring.validate();
  return ring;
}

// Named rings accepted wherever a ring file is expected.
inline CoordinateRing builtin_ring(const std::string& name) {
  if (name == "hopf") return CoordinateRing::hopf();
  throw PreconditionError("unknown builtin ring: " + name);
}

inline CoordinateRing load_ring(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_ring(spec.substr(8));
  std::ifstream in(spec);
  if (!in) throw PreconditionError("cannot open ring file: " + spec);
  Json j = Json::parse(in);
  return ring_from_json(j);
}

inline Json presentation_to_json(const braidvar::VarietyPresentation& pres) {
  Json j;
  j["strands"] = pres.strands;
  j["word"] = pres.word;
  j["variables"] = pres.ring.vars;
  Json rels = Json::array();
  for (const auto& r : pres.ring.relations) rels.push_back(r.str());
  j["relations"] = rels;
  Json units = Json::array();
  for (const auto& u : pres.ring.units) units.push_back(u.str());
  j["units"] = units;
  j["convention"] = pres.convention;
  return j;
}

inline braidvar::VarietyPresentation presentation_from_json(const Json& j) {
  braidvar::VarietyPresentation pres;
  pres.strands = j.at("strands").get<int>();
  pres.word = j.at("word").get<std::vector<int>>();
  pres.ring.vars = j.at("variables").get<std::vector<std::string>>();
  for (const auto& s : j.at("relations"))
    pres.ring.relations.push_back(exactalg::parse_poly(s.get<std::string>(), pres.ring.vars));
  for (const auto& s : j.at("units"))
    pres.ring.units.push_back(exactalg::parse_poly(s.get<std::string>(), pres.ring.vars));
  pres.convention = j.value("convention", std::string(braidvar::kConventionTag));
  pres.ring.validate();
  return pres;
}

inline braidvar::VarietyPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open presentation file: " + path);
  return presentation_from_json(Json::parse(in));
}

// Human-readable rendering of a report, one "key: value" line per leaf.
inline void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) render_table(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

inline std::string table_string(const Json& j) {
  std::ostringstream ss;
  render_table(j, "", ss);
  return ss.str();
}

}  // namespace mero::io
