#pragma once

// Small parsers for the CLI argument formats: comma-separated integers and
// rationals, quiver specs, chain specs and representation specs.

#include "merolib/holonomy.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

namespace mero::cli {

using exactalg::BigInt;
using exactalg::LaurentPoly;
using exactalg::PreconditionError;
using exactalg::Rational;
using exactalg::Scalar;
using quiverhh::Quiver;

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const auto& tok : split(text, ',')) {
    std::string t = trim(tok);
    if (t.empty()) throw PreconditionError("empty integer in list");
    out.push_back(std::stoi(t));
  }
  return out;
}

// Rational literals: "3", "-2", "1/2".
inline Scalar parse_scalar(const std::string& text) {
  std::string t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Scalar(BigInt(t));
  BigInt num(trim(t.substr(0, slash)));
  BigInt den(trim(t.substr(slash + 1)));
  return Scalar::rational(num, den);
}

inline std::vector<Scalar> parse_csv_scalars(const std::string& text) {
  std::vector<Scalar> out;
  if (trim(text).empty()) return out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_scalar(tok));
  return out;
}

// "cyclic:<n>" | "loop" | "file:<path>".
inline Quiver parse_quiver_spec(const std::string& spec) {
  if (spec == "loop") return Quiver::loop();
  if (spec.rfind("cyclic:", 0) == 0) return Quiver::cyclic(std::stoi(spec.substr(7)));
  if (spec.rfind("file:", 0) == 0) return Quiver::from_file(spec.substr(5));
  throw PreconditionError("unknown quiver spec: " + spec);
}

// Chain grammar: terms joined by + or -, each an optional integer coefficient
// times a class. Classes: "e<k>", "[lbl,lbl,...]", "rho" or "rho^m" (powers
// of the full cycle on cyclic and loop quivers).
inline quiverhh::TraceChain parse_chain_spec(const std::string& text, const Quiver& quiver) {
  quiverhh::TraceChain chain;
  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    long long sign = 1;
    if (text[pos] == '+') { ++pos; }
    else if (text[pos] == '-') { sign = -1; ++pos; }
    else if (!first) throw PreconditionError("chain: expected + or -");
    first = false;
    skip_ws();

    long long coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      coeff = std::stoll(text.substr(start, pos - start));
      skip_ws();
      if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
    }

    quiverhh::PathClass cls;
    if (pos < text.size() && text[pos] == 'e' && pos + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      cls = quiverhh::idempotent(std::stoi(text.substr(start, pos - start)));
    } else if (pos < text.size() && text[pos] == '[') {
      size_t close = text.find(']', pos);
      if (close == std::string::npos) throw PreconditionError("chain: missing ]");
      std::string inner = text.substr(pos + 1, close - pos - 1);
      pos = close + 1;
      std::vector<std::string> labels;
      for (const auto& l : split(inner, ',')) labels.push_back(trim(l));
      cls = quiverhh::canonicalize_cycle(quiver, labels);
    } else if (text.compare(pos, 3, "rho") == 0) {
      pos += 3;
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        power = std::stoi(text.substr(start, pos - start));
      }
      std::vector<int> walk;
      for (int m = 0; m < power; ++m)
        for (size_t a = 0; a < quiver.arrows.size(); ++a) walk.push_back(static_cast<int>(a));
      if (walk.empty()) throw PreconditionError("chain: rho^0 is not a cycle class");
      cls = quiverhh::canonicalize_cycle(quiver, walk);
    } else {
      throw PreconditionError("chain: expected e<k>, [labels] or rho at '" +
                              text.substr(pos) + "'");
    }
    chain.terms.push_back({Scalar(sign * coeff), cls});
  }
  if (chain.terms.empty()) throw PreconditionError("chain: empty");
  return chain;
}

struct ParsedRep {
  bool symbolic = false;
  quiverhh::Representation<Scalar> numeric_rep;
  quiverhh::Representation<LaurentPoly> symbolic_rep;
};

// Representation spec: "dims=1,1;a1=[[x]];a2=[[y]]" (the dims key is
// optional: "1,1;a1=[[2]];a2=[[3]]"). Matrix rows are ;-free bracket lists;
// entries are polynomial expressions. All-constant entries give a numeric
// representation, anything else a symbolic one.
inline ParsedRep parse_rep_spec(const std::string& text, const Quiver& quiver) {
  std::vector<int> dims;
  struct RawMatrix {
    std::string label;
    std::vector<std::vector<std::string>> rows;
  };
  std::vector<RawMatrix> raw;

  for (const auto& segment : split(text, ';')) {
    std::string seg = trim(segment);
    if (seg.empty()) continue;
    auto eq = seg.find('=');
    std::string key = eq == std::string::npos ? "" : trim(seg.substr(0, eq));
    std::string val = eq == std::string::npos ? seg : trim(seg.substr(eq + 1));
    if (eq == std::string::npos || key == "dims") {
      dims = parse_csv_ints(val);
      continue;
    }
    // Matrix literal [[a,b],[c,d]].
    if (val.size() < 4 || val.front() != '[' || val.back() != ']')
      throw PreconditionError("rep: bad matrix literal for " + key);
    std::string body = val.substr(1, val.size() - 2);
    RawMatrix m;
    m.label = key;
    size_t i = 0;
    while (i < body.size()) {
      if (body[i] == '[') {
        size_t close = body.find(']', i);
        if (close == std::string::npos) throw PreconditionError("rep: missing ]");
        std::vector<std::string> row;
        for (const auto& e : split(body.substr(i + 1, close - i - 1), ','))
          row.push_back(trim(e));
        m.rows.push_back(row);
        i = close + 1;
      } else {
        ++i;
      }
    }
    raw.push_back(std::move(m));
  }

  if (dims.empty()) throw PreconditionError("rep: missing dims");
  if (static_cast<int>(dims.size()) != quiver.n)
    throw PreconditionError("rep: dims arity does not match vertex count");

  // Decide numeric vs symbolic by scanning for identifiers.
  bool symbolic = false;
  for (const auto& m : raw)
    for (const auto& row : m.rows)
      for (const auto& e : row)
        if (!exactalg::collect_identifiers(e).empty()) symbolic = true;

  ParsedRep out;
  out.symbolic = symbolic;

  std::vector<std::string> vars;
  if (symbolic) {
    std::set<std::string> ids;
    for (const auto& m : raw)
      for (const auto& row : m.rows)
        for (const auto& e : row)
          for (const auto& id : exactalg::collect_identifiers(e)) ids.insert(id);
    vars.assign(ids.begin(), ids.end());
  }

  auto find_raw = [&](const std::string& label) -> const RawMatrix& {
    for (const auto& m : raw)
      if (m.label == label) return m;
    throw PreconditionError("rep: missing matrix for arrow " + label);
  };

  if (symbolic) {
    out.symbolic_rep.quiver = quiver;
    out.symbolic_rep.dims = dims;
  } else {
    out.numeric_rep.quiver = quiver;
    out.numeric_rep.dims = dims;
  }

  for (const auto& arrow : quiver.arrows) {
    const RawMatrix& m = find_raw(arrow.label);
    int rows = dims[static_cast<size_t>(arrow.tgt - 1)];
    int cols = dims[static_cast<size_t>(arrow.src - 1)];
    if (static_cast<int>(m.rows.size()) != rows)
      throw PreconditionError("rep: row count mismatch for " + arrow.label);
    for (const auto& row : m.rows)
      if (static_cast<int>(row.size()) != cols)
        throw PreconditionError("rep: column count mismatch for " + arrow.label);

    if (symbolic) {
      quiverhh::Matrix<LaurentPoly> mat(rows, cols, LaurentPoly::zero(vars));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          mat.at(r, c) = exactalg::parse_poly(m.rows[static_cast<size_t>(r)][static_cast<size_t>(c)], vars);
      out.symbolic_rep.mats.push_back(std::move(mat));
    } else {
      quiverhh::Matrix<Scalar> mat(rows, cols, Scalar(0));
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          const std::string& entry = m.rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
          // Rational literals like "1/2" are entries too, not just the
          // polynomial grammar.
          if (entry.find('/') != std::string::npos) {
            mat.at(r, c) = parse_scalar(entry);
          } else {
            auto p = exactalg::parse_poly(entry, std::vector<std::string>{});
            mat.at(r, c) = p.constant_value();
          }
        }
      out.numeric_rep.mats.push_back(std::move(mat));
    }
  }
  return out;
}

// "--caps d=6,u=3" for the regularity checker.
inline void apply_regular_caps(Caps& caps, const std::string& spec) {
  for (const auto& item : split(spec, ',')) {
    std::string t = trim(item);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw PreconditionError("caps: expected key=value");
    std::string key = trim(t.substr(0, eq));
    int value = std::stoi(trim(t.substr(eq + 1)));
    if (key == "d") caps.degree = value;
    else if (key == "u") caps.unit_multiplicity = value;
    else throw PreconditionError("caps: unknown key " + key);
  }
  if (caps.degree <= 0 || caps.unit_multiplicity < 0)
    throw PreconditionError("caps: values must be positive");
}

}  // namespace mero::cli
