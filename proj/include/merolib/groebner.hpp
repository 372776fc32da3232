#pragma once

// Buchberger's algorithm with reduced bases, multivariate division, and a
// degree-bounded linear-algebra membership oracle kept independent of the
// Groebner route so the two can check each other.

#include "merolib/caps.hpp"
#include "merolib/laurent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mero::groebner {

using exactalg::ArithmeticError;
using exactalg::CapExceededError;
using exactalg::ExpVec;
using exactalg::LaurentPoly;
using exactalg::PreconditionError;
using exactalg::Rational;
using exactalg::Scalar;

enum class OrderKind { Lex, GrevLex };

struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;

  // Strict order; 1 is minimal and the order is compatible with products.
  bool less(const ExpVec& a, const ExpVec& b) const {
    if (kind == OrderKind::Lex) {
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
      }
      return false;
    }
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    // Graded reverse lex: larger means smaller power of the last variable
    // where they differ.
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }

  std::string name() const { return kind == OrderKind::Lex ? "lex" : "grevlex"; }
};

namespace detail {

inline void require_polynomial(const LaurentPoly& f) {
  if (f.has_negative_exponent())
    throw PreconditionError("groebner: Laurent exponents not allowed here");
}

inline bool divides(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExpVec quotient(const ExpVec& a, const ExpVec& b) {
  ExpVec q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

inline ExpVec lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

inline long degree(const ExpVec& e) {
  long d = 0;
  for (int x : e) d += x;
  return d;
}

}  // namespace detail

inline std::pair<ExpVec, Scalar> leading_term(const LaurentPoly& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw PreconditionError("leading_term of zero");
  auto it = f.terms().begin();
  auto best = it;
  for (++it; it != f.terms().end(); ++it) {
    if (ord.less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

inline LaurentPoly make_monic(const LaurentPoly& f, const MonomialOrder& ord) {
  if (f.is_zero()) return f;
  auto [e, c] = leading_term(f, ord);
  return f.scale(c.inverse());
}

struct GroebnerBasis {
  std::vector<LaurentPoly> source;
  std::vector<LaurentPoly> basis;  // reduced, monic, sorted by leading term
  MonomialOrder order;
};

// Remainder of multivariate division of f by the basis; fully reduced, so
// no term of the result is divisible by any basis leading term.
inline LaurentPoly normal_form(const LaurentPoly& f, const std::vector<LaurentPoly>& basis,
                               const MonomialOrder& ord) {
  detail::require_polynomial(f);
  const auto& vars = f.vars();
  LaurentPoly p = f;
  LaurentPoly r = LaurentPoly::zero(vars);

  std::vector<std::pair<ExpVec, Scalar>> lts;
  lts.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    lts.push_back(leading_term(g, ord));
  }

  while (!p.is_zero()) {
    auto [e, c] = leading_term(p, ord);
    bool reduced = false;
    for (size_t i = 0; i < lts.size(); ++i) {
      if (detail::divides(lts[i].first, e)) {
        ExpVec q = detail::quotient(e, lts[i].first);
        Scalar coef = c / lts[i].second;
        LaurentPoly mult = LaurentPoly::monomial(vars, q, coef);
        p = p - mult * basis[i];
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      LaurentPoly t = LaurentPoly::monomial(vars, e, c);
      r = r + t;
      p = p - t;
    }
  }
  return r;
}

inline LaurentPoly normal_form(const LaurentPoly& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.basis, gb.order);
}

inline LaurentPoly s_polynomial(const LaurentPoly& f, const LaurentPoly& g,
                                const MonomialOrder& ord) {
  auto [ef, cf] = leading_term(f, ord);
  auto [eg, cg] = leading_term(g, ord);
  ExpVec m = detail::lcm(ef, eg);
  LaurentPoly mf = LaurentPoly::monomial(f.vars(), detail::quotient(m, ef), cf.inverse());
  LaurentPoly mg = LaurentPoly::monomial(g.vars(), detail::quotient(m, eg), cg.inverse());
  return mf * f - mg * g;
}

// Buchberger with the normal selection strategy and the coprimality
// criterion. The returned basis is the reduced Groebner basis, which is
// unique for the ideal and order, hence deterministic.
inline GroebnerBasis buchberger(const std::vector<LaurentPoly>& generators,
                                const MonomialOrder& ord, int pair_cap = Caps().pairs) {
  if (generators.empty()) throw PreconditionError("buchberger: no generators");
  const auto& vars = generators.front().vars();
  for (const auto& g : generators) {
    if (g.vars() != vars) throw PreconditionError("buchberger: variable mismatch");
    detail::require_polynomial(g);
  }

  std::vector<LaurentPoly> basis;
  for (const auto& g : generators) {
    if (!g.is_zero()) basis.push_back(make_monic(g, ord));
  }
  if (basis.empty()) throw PreconditionError("buchberger: zero ideal needs no basis");

  // Pair queue keyed by (lcm degree, lcm, i, j).
  using Key = std::tuple<long, ExpVec, size_t, size_t>;
  std::set<Key> queue;
  auto push_pairs = [&](size_t j) {
    auto [ej, cj] = leading_term(basis[j], ord);
    for (size_t i = 0; i < j; ++i) {
      auto [ei, ci] = leading_term(basis[i], ord);
      ExpVec m = detail::lcm(ei, ej);
      queue.insert({detail::degree(m), m, i, j});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  int processed = 0;
  while (!queue.empty()) {
    if (++processed > pair_cap)
      throw CapExceededError("buchberger: pair cap exceeded (undecided)");
    auto [deg, m, i, j] = *queue.begin();
    queue.erase(queue.begin());

    auto [ei, ci] = leading_term(basis[i], ord);
    auto [ej, cj] = leading_term(basis[j], ord);
    // First Buchberger criterion: coprime leading monomials.
    bool coprime = true;
    for (size_t k = 0; k < ei.size(); ++k) {
      if (ei[k] > 0 && ej[k] > 0) { coprime = false; break; }
    }
    if (coprime) continue;

    LaurentPoly s = s_polynomial(basis[i], basis[j], ord);
    LaurentPoly r = normal_form(s, basis, ord);
    if (!r.is_zero()) {
      basis.push_back(make_monic(r, ord));
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<LaurentPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    auto [ei, ci] = leading_term(basis[i], ord);
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      auto [ej, cj] = leading_term(basis[j], ord);
      if (detail::divides(ej, ei) && (ej != ei || j < i)) { redundant = true; break; }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Fully reduce each element against the others.
  std::vector<LaurentPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<LaurentPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    LaurentPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(make_monic(r, ord));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const LaurentPoly& a, const LaurentPoly& b) {
    return ord.less(leading_term(a, ord).first, leading_term(b, ord).first);
  });

  GroebnerBasis gb;
  gb.source = generators;
  gb.basis = std::move(reduced);
  gb.order = ord;
  return gb;
}

namespace detail {

// Monomials of total degree <= cap in v variables, deterministic order.
inline std::vector<ExpVec> monomials_up_to(size_t v, int cap) {
  std::vector<ExpVec> out;
  ExpVec cur(v, 0);
  // Odometer in degrees: recursive enumeration, leftmost slowest.
  std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
    if (i == v) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      cur[i] = d;
      rec(i + 1, remaining - d);
    }
    cur[i] = 0;
  };
  rec(0, cap);
  return out;
}

// Exact dense linear solve A x = b over Q. Returns a particular solution
// (free variables set to 0) or nullopt when inconsistent. cols is explicit
// because the system may have no rows at all.
inline std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b, size_t cols) {
  const size_t rows = A.size();
  std::vector<size_t> pivot_col_of_row;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    Rational inv = Rational(1) / A[r][c];
    for (size_t k = c; k < cols; ++k) A[r][k] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
      b[i] -= f * b[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

}  // namespace detail

// Cofactors h_i with sum_i h_i g_i = f and deg h_i <= cap, found by solving
// a linear system over the cofactor coefficients. Independent of the
// Groebner route. nullopt when no such bounded certificate exists.
inline std::optional<std::vector<LaurentPoly>> membership_cofactors(
    const LaurentPoly& f, const std::vector<LaurentPoly>& generators, int cap,
    std::uint64_t size_cap = 4'000'000) {
  const auto& vars = f.vars();
  for (const auto& g : generators) {
    if (g.vars() != vars) throw PreconditionError("membership_oracle: variable mismatch");
    detail::require_polynomial(g);
  }
  detail::require_polynomial(f);

  if (generators.empty()) {
    if (f.is_zero()) return std::vector<LaurentPoly>{};
    return std::nullopt;
  }

  auto monos = detail::monomials_up_to(vars.size(), cap);

  // Row index: every monomial appearing in some m*g_i or in f.
  std::map<ExpVec, size_t> row_of;
  std::vector<std::map<size_t, Rational>> columns;
  auto row_id = [&](const ExpVec& e) {
    auto [it, inserted] = row_of.emplace(e, row_of.size());
    return it->second;
  };

  for (const auto& g : generators) {
    for (const auto& m : monos) {
      LaurentPoly prod = LaurentPoly::monomial(vars, m, Scalar(1)) * g;
      std::map<size_t, Rational> col;
      for (const auto& [e, c] : prod.terms()) col[row_id(e)] = c.rat();
      columns.push_back(std::move(col));
    }
  }
  for (const auto& [e, c] : f.terms()) row_id(e);

  const size_t rows = row_of.size();
  const size_t cols = columns.size();
  if (static_cast<std::uint64_t>(rows) * cols > size_cap)
    throw CapExceededError("membership_oracle: system exceeds size cap");

  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(rows, Rational(0));
  for (size_t c = 0; c < cols; ++c)
    for (const auto& [r, val] : columns[c]) A[r][c] = val;
  for (const auto& [e, cval] : f.terms()) b[row_of[e]] = cval.rat();

  auto sol = detail::solve_linear(std::move(A), std::move(b), cols);
  if (!sol) return std::nullopt;

  std::vector<LaurentPoly> cofactors;
  for (size_t g = 0; g < generators.size(); ++g) {
    LaurentPoly h = LaurentPoly::zero(vars);
    for (size_t m = 0; m < monos.size(); ++m) {
      const Rational& c = (*sol)[g * monos.size() + m];
      if (c != 0) h = h + LaurentPoly::monomial(vars, monos[m], Scalar(c));
    }
    cofactors.push_back(std::move(h));
  }
  return cofactors;
}

inline bool membership_oracle(const LaurentPoly& f, const std::vector<LaurentPoly>& generators,
                              int cap, std::uint64_t size_cap = 4'000'000) {
  return membership_cofactors(f, generators, cap, size_cap).has_value();
}

}  // namespace mero::groebner
