#pragma once

// Localized affine coordinate rings: ambient variables, polynomial relations
// (nonnegative exponents) and distinguished units that are formally inverted.
// Points over F_q are enumerated by brute force; this is the oracle behind
// all point counts.

#include "merolib/caps.hpp"
#include "merolib/laurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mero::exactalg {

struct CoordinateRing {
  std::vector<std::string> vars;
  std::vector<LaurentPoly> relations;  // honest polynomials, no negative exponents
  std::vector<LaurentPoly> units;      // formally inverted, no negative exponents

  void validate() const {
    for (const auto& f : relations) {
      if (f.vars() != vars) throw PreconditionError("CoordinateRing: relation variable mismatch");
      if (f.has_negative_exponent())
        throw PreconditionError("CoordinateRing: relation with negative exponent");
    }
    for (const auto& u : units) {
      if (u.vars() != vars) throw PreconditionError("CoordinateRing: unit variable mismatch");
      if (u.has_negative_exponent())
        throw PreconditionError("CoordinateRing: unit with negative exponent");
      if (u.is_zero()) throw PreconditionError("CoordinateRing: zero unit");
    }
  }

  static CoordinateRing polynomial_ring(std::vector<std::string> vars) {
    CoordinateRing r;
    r.vars = std::move(vars);
    return r;
  }

  // Z[x,y] localized at (1+xy).
  static CoordinateRing hopf() {
    CoordinateRing r = polynomial_ring({"x", "y"});
    r.units.push_back(parse_poly("1 + x*y", r.vars));
    return r;
  }
};

// All points of F_q^v where every relation vanishes and every unit is
// nonzero, as reduced residues, in odometer order (last coordinate fastest).
inline std::vector<std::vector<std::uint32_t>> enumerate_points(
    const CoordinateRing& ring, std::uint32_t q, std::uint64_t cap = Caps().enumeration) {
  if (!is_prime_u32(q)) throw PreconditionError("enumerate_points: q must be prime");
  ring.validate();
  const size_t v = ring.vars.size();

  std::uint64_t total = 1;
  for (size_t i = 0; i < v; ++i) {
    if (total > cap / q + 1) throw CapExceededError("enumerate_points: q^v exceeds cap");
    total *= q;
    if (total > cap) throw CapExceededError("enumerate_points: q^v exceeds cap");
  }

  std::vector<std::vector<std::uint32_t>> points;
  std::vector<std::uint32_t> assign(v, 0);
  std::vector<Scalar> pt(v, Scalar::fp(0, q));
  for (std::uint64_t it = 0; it < total; ++it) {
    for (size_t i = 0; i < v; ++i) pt[i] = Scalar::fp(assign[i], q);
    bool ok = true;
    for (const auto& f : ring.relations) {
      if (!f.evaluate(pt, q).is_zero()) { ok = false; break; }
    }
    if (ok) {
      for (const auto& u : ring.units) {
        if (u.evaluate(pt, q).is_zero()) { ok = false; break; }
      }
    }
    if (ok) points.push_back(assign);
    // Odometer step, last coordinate fastest.
    for (size_t i = v; i-- > 0;) {
      if (++assign[i] < q) break;
      assign[i] = 0;
    }
    if (v == 0) break;  // the empty product has a single point
  }
  return points;
}

inline std::uint64_t count_points(const CoordinateRing& ring, std::uint32_t q,
                                  std::uint64_t cap = Caps().enumeration) {
  return enumerate_points(ring, q, cap).size();
}

// Spot check that no distinguished unit lies in the ideal: a unit that
// vanishes on every F_q point of the variety for several q is suspect.
// Full certainty is an is_regular-style query; this is the sampled version.
inline bool units_plausible(const CoordinateRing& ring, const std::vector<std::uint32_t>& qs,
                            std::uint64_t cap = Caps().enumeration) {
  for (std::uint32_t q : qs) {
    CoordinateRing no_units = ring;
    no_units.units.clear();
    auto pts = enumerate_points(no_units, q, cap);
    if (pts.empty()) continue;
    for (const auto& u : ring.units) {
      bool vanishes_everywhere = true;
      for (const auto& p : pts) {
        std::vector<Scalar> pt;
        pt.reserve(p.size());
        for (auto x : p) pt.push_back(Scalar::fp(x, q));
        if (!u.evaluate(pt, q).is_zero()) { vanishes_everywhere = false; break; }
      }
      if (vanishes_everywhere) return false;
    }
  }
  return true;
}

}  // namespace mero::exactalg
