#pragma once

// Decides whether a rational section num/den on a localized coordinate ring
// extends to a ring element, i.e. whether it is a regular function. The
// verdicts are sound in both directions:
//   regular(h, w):   num * w == h * den  (mod ideal), w a product of
//                    distinguished units, so the section equals h/w.
//   not_regular:     an explicit F_q variety point where den vanishes but
//                    num does not (a pole). The point's integer lift must
//                    also be a pole over Q (relations vanish, units and
//                    numerator nonzero, denominator zero); poles that exist
//                    only in a bad-prime fiber are not certificates, which
//                    is what makes regular and not_regular mutually
//                    exclusive across cap settings.
//   undecided:       caps exhausted; never a wrong answer.

#include "merolib/caps.hpp"
#include "merolib/groebner.hpp"
#include "merolib/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mero::groebner {

using exactalg::CoordinateRing;

struct RationalSection {
  LaurentPoly numerator;
  LaurentPoly denominator;
  CoordinateRing ring;

  void validate() const {
    ring.validate();
    if (numerator.vars() != ring.vars || denominator.vars() != ring.vars)
      throw PreconditionError("RationalSection: variable mismatch");
    detail::require_polynomial(numerator);
    detail::require_polynomial(denominator);
    if (denominator.is_zero()) throw PreconditionError("RationalSection: zero denominator");
  }

  // Sampled check that the denominator is not in the ideal: it must be
  // nonzero somewhere on the F_q variety for some sampled q. Full certainty
  // would be an ideal-membership query.
  bool denominator_plausible(const std::vector<std::uint32_t>& qs,
                             std::uint64_t cap = Caps().enumeration) const {
    for (std::uint32_t q : qs) {
      auto pts = exactalg::enumerate_points(ring, q, cap);
      for (const auto& p : pts) {
        std::vector<Scalar> pt;
        pt.reserve(p.size());
        for (auto x : p) pt.push_back(Scalar::fp(x, q));
        if (!denominator.evaluate(pt, q).is_zero()) return true;
      }
    }
    return false;
  }
};

enum class RegularityStatus { Regular, NotRegular, Undecided };

struct PoleCertificate {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> point;
};

struct RegularityResult {
  RegularityStatus status = RegularityStatus::Undecided;
  std::optional<LaurentPoly> witness;        // h with num*w == h*den (mod ideal)
  std::optional<LaurentPoly> unit_cofactor;  // the unit product w
  std::optional<PoleCertificate> certificate;
  std::string note;
};

namespace detail {

// Unit products of total multiplicity <= cap, smallest multiplicity first;
// the exponent tuples within one multiplicity are in lexicographic order.
inline std::vector<std::vector<int>> unit_exponent_tuples(size_t n_units, int cap) {
  std::vector<std::vector<int>> out;
  for (int total = 0; total <= cap; ++total) {
    std::vector<int> cur(n_units, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
      if (i == n_units) {
        if (remaining == 0) out.push_back(cur);
        return;
      }
      for (int d = remaining; d >= 0; --d) {
        cur[i] = d;
        rec(i + 1, remaining - d);
      }
      cur[i] = 0;
    };
    if (n_units == 0) {
      if (total == 0) out.push_back({});
      continue;
    }
    rec(0, total);
  }
  return out;
}

// Look for h of degree <= dcap with target == h * den modulo the ideal
// (ideal given by its reduced basis; empty basis means the zero ideal).
inline std::optional<LaurentPoly> solve_cofactor(const LaurentPoly& target,
                                                 const LaurentPoly& den,
                                                 const std::vector<LaurentPoly>& basis,
                                                 const MonomialOrder& ord, int dcap,
                                                 std::uint64_t size_cap = 4'000'000) {
  const auto& vars = target.vars();
  auto nf = [&](const LaurentPoly& p) {
    return basis.empty() ? p : normal_form(p, basis, ord);
  };

  LaurentPoly rhs = nf(target);
  auto monos = monomials_up_to(vars.size(), dcap);

  std::map<ExpVec, size_t> row_of;
  auto row_id = [&](const ExpVec& e) {
    auto [it, inserted] = row_of.emplace(e, row_of.size());
    return it->second;
  };

  std::vector<std::map<size_t, Rational>> columns;
  columns.reserve(monos.size());
  for (const auto& m : monos) {
    LaurentPoly col_poly = nf(LaurentPoly::monomial(vars, m, Scalar(1)) * den);
    std::map<size_t, Rational> col;
    for (const auto& [e, c] : col_poly.terms()) col[row_id(e)] = c.rat();
    columns.push_back(std::move(col));
  }
  for (const auto& [e, c] : rhs.terms()) row_id(e);

  const size_t rows = row_of.size();
  const size_t cols = columns.size();
  if (static_cast<std::uint64_t>(rows) * cols > size_cap)
    throw CapExceededError("is_regular: witness system exceeds size cap");

  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(rows, Rational(0));
  for (size_t c = 0; c < cols; ++c)
    for (const auto& [r, val] : columns[c]) A[r][c] = val;
  for (const auto& [e, cval] : rhs.terms()) b[row_of[e]] = cval.rat();

  auto sol = solve_linear(std::move(A), std::move(b), cols);
  if (!sol) return std::nullopt;

  LaurentPoly h = LaurentPoly::zero(vars);
  for (size_t i = 0; i < monos.size(); ++i) {
    if ((*sol)[i] != 0)
      h = h + LaurentPoly::monomial(vars, monos[i], Scalar((*sol)[i]));
  }
  return h;
}

}  // namespace detail

inline RegularityResult is_regular(const RationalSection& section, const Caps& caps = Caps()) {
  section.validate();
  const CoordinateRing& ring = section.ring;
  const auto& vars = ring.vars;

  MonomialOrder ord{OrderKind::GrevLex};
  RegularityResult result;

  std::vector<LaurentPoly> basis;
  try {
    if (!ring.relations.empty()) {
      bool all_zero = true;
      for (const auto& r : ring.relations)
        if (!r.is_zero()) all_zero = false;
      if (!all_zero) basis = buchberger(ring.relations, ord, caps.pairs).basis;
    }
  } catch (const CapExceededError& e) {
    result.note = e.what();
    return result;  // undecided
  }

  // Search for a witness: num * w == h * den (mod ideal) for a unit product
  // w of bounded multiplicity and h of bounded degree.
  bool caps_hit = false;
  auto tuples = detail::unit_exponent_tuples(ring.units.size(), caps.unit_multiplicity);
  for (const auto& exps : tuples) {
    LaurentPoly w = LaurentPoly::one(vars);
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) w = w * ring.units[i].pow(exps[i]);
    }
    try {
      auto h = detail::solve_cofactor(section.numerator * w, section.denominator, basis, ord,
                                      caps.degree);
      if (h) {
        result.status = RegularityStatus::Regular;
        result.witness = *h;
        result.unit_cofactor = w;
        return result;
      }
    } catch (const CapExceededError&) {
      caps_hit = true;
    }
  }

  // Hunt for a pole certificate over small prime fields. A candidate is
  // accepted only if its integer lift is a pole over Q as well; a pole that
  // exists only in a bad-prime fiber certifies nothing in characteristic 0.
  for (std::uint32_t q : caps.primes) {
    std::uint64_t total = 1;
    bool in_cap = true;
    for (size_t i = 0; i < vars.size(); ++i) {
      total *= q;
      if (total > caps.enumeration) { in_cap = false; break; }
    }
    if (!in_cap) { caps_hit = true; continue; }
    auto points = exactalg::enumerate_points(ring, q, caps.enumeration);
    for (const auto& p : points) {
      std::vector<Scalar> pt;
      pt.reserve(p.size());
      for (auto x : p) pt.push_back(Scalar::fp(x, q));
      if (!section.denominator.evaluate(pt, q).is_zero()) continue;
      if (section.numerator.evaluate(pt, q).is_zero()) continue;

      // Rational lift of the same coordinates.
      std::vector<Scalar> lift;
      lift.reserve(p.size());
      for (auto x : p) lift.push_back(Scalar(static_cast<long long>(x)));
      bool on_variety = true;
      for (const auto& rel : ring.relations)
        if (!rel.evaluate(lift).is_zero()) { on_variety = false; break; }
      if (on_variety)
        for (const auto& u : ring.units)
          if (u.evaluate(lift).is_zero()) { on_variety = false; break; }
      if (!on_variety) continue;
      if (!section.denominator.evaluate(lift).is_zero()) continue;
      if (section.numerator.evaluate(lift).is_zero()) continue;

      result.status = RegularityStatus::NotRegular;
      result.certificate = PoleCertificate{q, p};
      return result;
    }
  }

  result.status = RegularityStatus::Undecided;
  result.note = caps_hit ? "caps exhausted" : "no witness within caps, no pole certificate found";
  return result;
}

}  // namespace mero::groebner
