#pragma once

// Multivariate Laurent polynomials with exact coefficients, plus the text
// grammar used across the CLI: identifiers, `^` integer powers (negative
// allowed), `*`, `+`, `-` and parentheses. No implicit multiplication.

#include "merolib/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mero::exactalg {

using ExpVec = std::vector<int>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly zero(const std::vector<std::string>& vars) { return LaurentPoly(vars); }

  static LaurentPoly constant(const std::vector<std::string>& vars, const Scalar& c) {
    LaurentPoly p(vars);
    if (!c.is_zero()) p.terms_[ExpVec(vars.size(), 0)] = c;
    return p;
  }

  static LaurentPoly one(const std::vector<std::string>& vars) {
    return constant(vars, Scalar(1));
  }

  static LaurentPoly monomial(const std::vector<std::string>& vars, ExpVec e, const Scalar& c) {
    if (e.size() != vars.size()) throw PreconditionError("monomial: exponent arity mismatch");
    LaurentPoly p(vars);
    if (!c.is_zero()) p.terms_[std::move(e)] = c;
    return p;
  }

  static LaurentPoly variable(const std::vector<std::string>& vars, const std::string& name,
                              int exp = 1) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw PreconditionError("unknown variable: " + name);
    ExpVec e(vars.size(), 0);
    e[static_cast<size_t>(it - vars.begin())] = exp;
    return monomial(vars, e, Scalar(1));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<ExpVec, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t arity() const { return vars_.size(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExpVec(vars_.size(), 0);
  }

  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    return terms_.begin()->second;
  }

  bool has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return true;
    return false;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (int x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    check_arity(o);
    LaurentPoly r(vars_);
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const {
    check_arity(o);
    LaurentPoly r(vars_);
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    check_arity(o);
    LaurentPoly r(vars_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        ExpVec e(e1.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }

  LaurentPoly scale(const Scalar& c) const {
    LaurentPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }

  LaurentPoly pow(int n) const {
    if (n < 0) throw PreconditionError("LaurentPoly::pow: negative exponent");
    LaurentPoly r = one(vars_);
    LaurentPoly b = *this;
    while (n) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact evaluation. With a modulus, coefficients and point entries are
  // reduced into F_q first. Assigning 0 to a variable with a negative
  // exponent is a pole and raises ArithmeticError.
  Scalar evaluate(const std::vector<Scalar>& point,
                  std::optional<std::uint32_t> modulus = std::nullopt) const {
    if (point.size() != vars_.size())
      throw PreconditionError("evaluate: point arity mismatch");
    std::vector<Scalar> pt = point;
    Scalar acc = modulus ? Scalar::fp(0, *modulus) : Scalar(0);
    if (modulus)
      for (auto& s : pt) s = s.to_fp(*modulus);
    for (const auto& [e, c] : terms_) {
      Scalar t = modulus ? c.to_fp(*modulus) : c;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] < 0 && pt[i].is_zero())
          throw ArithmeticError("evaluate: pole at variable " + vars_[i]);
        t = t * pt[i].pow(e[i]);
      }
      acc = acc + t;
    }
    return acc;
  }

  // Substitute each variable by a polynomial over a (possibly different)
  // variable list. All images must share one variable list.
  LaurentPoly substitute(const std::vector<LaurentPoly>& images) const {
    if (images.size() != vars_.size())
      throw PreconditionError("substitute: image count mismatch");
    std::vector<std::string> tvars = images.empty() ? vars_ : images[0].vars();
    LaurentPoly r = zero(tvars);
    for (const auto& [e, c] : terms_) {
      LaurentPoly t = constant(tvars, c);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] > 0) {
          t = t * images[i].pow(e[i]);
        } else {
          // Negative powers only substitute cleanly by monomials.
          const LaurentPoly& m = images[i];
          if (m.terms_.size() != 1)
            throw PreconditionError("substitute: negative power of a non-monomial");
          auto [me, mc] = *m.terms_.begin();
          ExpVec inv(me.size());
          for (size_t j = 0; j < me.size(); ++j) inv[j] = -me[j];
          LaurentPoly mi = monomial(tvars, inv, mc.inverse());
          t = t * mi.pow(-e[i]);
        }
      }
      r = r + t;
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest exponent vector first; the map order makes this deterministic.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Scalar coeff = c;
      bool negative = false;
      if (coeff.is_rational() && coeff.rat() < 0) {
        negative = true;
        coeff = -coeff;
      }
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mon = monomial_str(e);
      if (mon.empty()) {
        out += coeff.str();
      } else if (coeff.is_one()) {
        out += mon;
      } else {
        out += coeff.str() + "*" + mon;
      }
    }
    return out;
  }

 private:
  std::string monomial_str(const ExpVec& e) const {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars_[i];
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  void check_arity(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw PreconditionError("polynomial arity/variable mismatch");
  }

  void add_term(const ExpVec& e, const Scalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[e] = c;
      return;
    }
    Scalar s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = s;
  }

  std::vector<std::string> vars_;
  std::map<ExpVec, Scalar> terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars)
      : s_(text), vars_(vars) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw PreconditionError("parse error at '" + rest() + "'");
    return p;
  }

 private:
  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    LaurentPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      int e = integer();
      if (e >= 0) return base.pow(e);
      // Negative powers are only defined for monomials.
      if (base.terms().size() != 1)
        throw PreconditionError("negative power of a non-monomial");
      auto [ev, c] = *base.terms().begin();
      ExpVec inv(ev.size());
      for (size_t i = 0; i < ev.size(); ++i) inv[i] = ev[i] * e;
      return LaurentPoly::monomial(base.vars(), inv, c.pow(e));
    }
    return base;
  }

  LaurentPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      skip_ws();
      if (peek() != ')') throw PreconditionError("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt n = bigint();
      return LaurentPoly::constant(vars_, Scalar(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id = ident();
      return LaurentPoly::variable(vars_, id);
    }
    throw PreconditionError("parse error at '" + rest() + "'");
  }

  int integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos_; }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw PreconditionError("expected integer exponent");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) throw PreconditionError("exponent too large");
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  BigInt bigint() {
    BigInt v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::string ident() {
    std::string id;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      id += s_[pos_];
      ++pos_;
    }
    return id;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  std::string rest() const { return s_.substr(pos_); }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).parse();
}

// Identifiers appearing in a polynomial expression, sorted and deduplicated.
inline std::vector<std::string> collect_identifiers(const std::string& text) {
  std::set<std::string> ids;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        id += text[i];
        ++i;
      }
      ids.insert(id);
    } else {
      ++i;
    }
  }
  return {ids.begin(), ids.end()};
}

enum class PolyOp { Add, Sub, Mul };

inline LaurentPoly poly_op(const LaurentPoly& lhs, const LaurentPoly& rhs, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return lhs + rhs;
    case PolyOp::Sub: return lhs - rhs;
    case PolyOp::Mul: return lhs * rhs;
  }
  throw PreconditionError("poly_op: unknown op");
}

}  // namespace mero::exactalg
