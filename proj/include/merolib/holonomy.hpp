#pragma once

// The local-to-global pipeline at desk scale. A relative cycle enters as a
// crossing word (signed crossings with the disks of a compressing system).
// Positive words lift to the full-cycle trace class of a cyclic quiver; the
// lift evaluates on moduli points as a trace and restricts to the chart as
// a Laurent monomial. The word is treated cyclically: the two decorated
// endpoints carry a common trivialization, which closes the interval model
// up to a circle.

#include "merolib/braid.hpp"
#include "merolib/representation.hpp"
#include "merolib/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mero::holonomy {

using exactalg::ArithmeticError;
using exactalg::LaurentPoly;
using exactalg::PreconditionError;
using exactalg::Scalar;
using quiverhh::Matrix;
using quiverhh::PathClass;
using quiverhh::Quiver;
using quiverhh::Representation;
using quiverhh::TraceChain;

struct Crossing {
  int disk = 0;   // 1-based disk index
  int sign = +1;  // +1 or -1
};

struct CrossingWord {
  std::vector<Crossing> crossings;
  int disks = 0;
  std::string start_basepoint = "t_a";
  std::string end_basepoint = "t_b";

  void validate() const {
    if (disks < 0) throw PreconditionError("CrossingWord: negative disk count");
    for (const auto& c : crossings) {
      if (c.disk < 1 || c.disk > disks)
        throw PreconditionError("CrossingWord: disk index out of range");
      if (c.sign != 1 && c.sign != -1)
        throw PreconditionError("CrossingWord: sign must be +1 or -1");
    }
  }

  // "+1,+2,-1"; an empty string is the empty word.
  static CrossingWord parse(const std::string& text, int disks = 0) {
    CrossingWord w;
    std::string tok;
    auto flush = [&]() {
      if (tok.empty()) return;
      int sign = +1;
      size_t i = 0;
      if (tok[0] == '+') { i = 1; }
      else if (tok[0] == '-') { sign = -1; i = 1; }
      if (i >= tok.size()) throw PreconditionError("CrossingWord: bad token " + tok);
      int disk = std::stoi(tok.substr(i));
      w.crossings.push_back({disk, sign});
      tok.clear();
    };
    for (char c : text) {
      if (c == ',' ) flush();
      else if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
    }
    flush();
    int max_disk = 0;
    for (const auto& c : w.crossings) max_disk = std::max(max_disk, c.disk);
    w.disks = disks > 0 ? disks : max_disk;
    w.validate();
    return w;
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < crossings.size(); ++i) {
      if (i) out += ",";
      out += crossings[i].sign > 0 ? "+" : "-";
      out += std::to_string(crossings[i].disk);
    }
    return out;
  }
};

// Entry i: signed crossing count with disk i.
inline std::vector<long> intersection_vector(const CrossingWord& w) {
  w.validate();
  std::vector<long> v(static_cast<size_t>(w.disks), 0);
  for (const auto& c : w.crossings) v[static_cast<size_t>(c.disk - 1)] += c.sign;
  return v;
}

struct ReducedCrossing {
  Crossing crossing;
  size_t original_index;
};

// Free cyclic cancellation: adjacent crossings (cyclically) on the same disk
// with opposite signs cancel, iterated to a fixed point. The result is the
// cyclically reduced word, unique up to rotation.
inline std::vector<ReducedCrossing> cyclic_reduce(const CrossingWord& w) {
  w.validate();
  std::vector<ReducedCrossing> cur;
  cur.reserve(w.crossings.size());
  for (size_t i = 0; i < w.crossings.size(); ++i) cur.push_back({w.crossings[i], i});

  bool changed = true;
  while (changed && cur.size() >= 2) {
    changed = false;
    const size_t n = cur.size();
    for (size_t i = 0; i < n; ++i) {
      size_t j = (i + 1) % n;
      if (cur[i].crossing.disk == cur[j].crossing.disk &&
          cur[i].crossing.sign == -cur[j].crossing.sign) {
        std::vector<ReducedCrossing> next;
        for (size_t k = 0; k < n; ++k)
          if (k != i && k != j) next.push_back(cur[k]);
        cur = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

enum class PositivityMode { Geometric, Homological };

inline bool is_positive(const CrossingWord& w, PositivityMode mode) {
  if (mode == PositivityMode::Homological) {
    for (long v : intersection_vector(w))
      if (v < 0) return false;
    return true;
  }
  for (const auto& rc : cyclic_reduce(w))
    if (rc.crossing.sign < 0) return false;
  return true;
}

struct PositivityError : std::runtime_error {
  size_t offending_index;
  explicit PositivityError(size_t idx)
      : std::runtime_error("positivity violated at crossing index " + std::to_string(idx)),
        offending_index(idx) {}
};

// The local Hochschild lift of a positive word: the full-cycle class on the
// cyclic quiver with one vertex per surviving crossing. The empty reduced
// word degenerates to the circle model, whose lift is the loop generator.
struct LocalLift {
  Quiver quiver;
  TraceChain chain;
  size_t reduced_length = 0;
};

inline LocalLift local_lift(const CrossingWord& w) {
  auto reduced = cyclic_reduce(w);
  for (const auto& rc : reduced)
    if (rc.crossing.sign < 0) throw PositivityError(rc.original_index);

  LocalLift lift;
  lift.reduced_length = reduced.size();
  if (reduced.empty()) {
    lift.quiver = Quiver::loop("t");
    lift.chain = TraceChain::single(
        quiverhh::canonicalize_cycle(lift.quiver, std::vector<int>{0}));
    return lift;
  }
  const int k = static_cast<int>(reduced.size());
  lift.quiver = Quiver::cyclic(k, "a");
  std::vector<int> full_cycle(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) full_cycle[static_cast<size_t>(i)] = i;
  lift.chain = TraceChain::single(quiverhh::canonicalize_cycle(lift.quiver, full_cycle));
  return lift;
}

// Chart restriction: the full-cycle power [rho^m] maps to the Laurent
// monomial rho^m, idempotents to their (rank-1) vertex dimension.
inline LaurentPoly restrict_to_chart(const LocalLift& lift) {
  const std::vector<std::string> vars = {"rho"};
  const size_t n = lift.quiver.arrows.size();
  LaurentPoly out = LaurentPoly::zero(vars);
  for (const auto& [coeff, cls] : lift.chain.terms) {
    if (cls.is_idempotent()) {
      out = out + LaurentPoly::constant(vars, coeff);
      continue;
    }
    if (n == 0 || cls.arrows.size() % n != 0)
      throw PreconditionError("restrict_to_chart: not a power of the full cycle");
    int m = static_cast<int>(cls.arrows.size() / n);
    out = out + LaurentPoly::monomial(vars, {m}, coeff);
  }
  return out;
}

// A point of the rank-1 local-system chart: one invertible scalar per basis
// element of the relative first homology.
struct ChartPoint {
  std::vector<Scalar> coords;

  void validate() const {
    for (const auto& c : coords)
      if (c.is_zero()) throw PreconditionError("ChartPoint: coordinates must be invertible");
  }
};

// Parallel transport along a homology class: the monomial prod x_j^{cls_j}.
inline Scalar merodromy(const ChartPoint& point, const std::vector<long>& cls) {
  point.validate();
  if (cls.size() != point.coords.size())
    throw PreconditionError("merodromy: class length does not match chart rank");
  Scalar acc = point.coords.empty() || point.coords[0].is_rational()
                   ? Scalar(1)
                   : Scalar::fp(1, point.coords[0].modulus());
  for (size_t i = 0; i < cls.size(); ++i) acc = acc * point.coords[i].pow(cls[i]);
  return acc;
}

// A moduli point of the n-spike local model: one r x r matrix per spike,
// not required invertible.
struct KnModuliPoint {
  int rank = 1;
  std::vector<Matrix<Scalar>> mats;

  void validate() const {
    if (rank < 1) throw PreconditionError("KnModuliPoint: rank must be >= 1");
    for (const auto& m : mats)
      if (m.rows != rank || m.cols != rank)
        throw PreconditionError("KnModuliPoint: matrices must be rank x rank");
  }
};

inline Scalar ho_on_moduli(const LocalLift& lift, const KnModuliPoint& point) {
  point.validate();
  if (point.mats.size() != lift.quiver.arrows.size())
    throw PreconditionError("ho_on_moduli: matrix count does not match spike count");
  Representation<Scalar> rep;
  rep.quiver = lift.quiver;
  rep.dims.assign(static_cast<size_t>(lift.quiver.n), point.rank);
  rep.mats = point.mats;
  return ho_trace(lift.chain, rep);
}

// ---------------------------------------------------------------------------
// Hopf link: basepoint action and orbit census on X = Spec Z[x,y]_(1+xy).

struct HopfPoint {
  Scalar x, y;

  // Points live on the localization at (1 + xy).
  void validate() const {
    Scalar one = x.is_fp() ? Scalar::fp(1, x.modulus()) : Scalar(1);
    if ((one + x * y).is_zero())
      throw PreconditionError("HopfPoint: 1 + xy must be invertible");
  }
};

// (t1,t2).(x,y) = (t1 x t2^-1, t2 y t1^-1); preserves 1 + xy exactly.
inline HopfPoint hopf_action(const Scalar& t1, const Scalar& t2, const HopfPoint& p) {
  if (t1.is_zero() || t2.is_zero())
    throw PreconditionError("hopf_action: frame must be invertible");
  p.validate();
  return {t1 * p.x * t2.inverse(), t2 * p.y * t1.inverse()};
}

// Symbolic form of the action on coordinate functions, for exact identities.
inline std::pair<LaurentPoly, LaurentPoly> hopf_action_symbolic() {
  const std::vector<std::string> vars = {"t1", "t2", "x", "y"};
  LaurentPoly t1 = LaurentPoly::variable(vars, "t1");
  LaurentPoly t2i = LaurentPoly::variable(vars, "t2", -1);
  LaurentPoly t2 = LaurentPoly::variable(vars, "t2");
  LaurentPoly t1i = LaurentPoly::variable(vars, "t1", -1);
  LaurentPoly x = LaurentPoly::variable(vars, "x");
  LaurentPoly y = LaurentPoly::variable(vars, "y");
  return {t1 * x * t2i, t2 * y * t1i};
}

struct HopfCensus {
  std::uint32_t q = 0;
  std::uint64_t total = 0;
  std::uint64_t free_alpha_orbits = 0;  // orbits {xy = alpha}, alpha != 0,-1
  std::uint64_t free_alpha_orbit_size = 0;
  std::uint64_t orbit_x_size = 0;  // {y = 0, x != 0}
  std::uint64_t orbit_y_size = 0;  // {x = 0, y != 0}
  std::uint64_t fixed_points = 0;  // {(0,0)}
};

// Enumerate X(F_q) = {1+xy != 0}, act by the reduced one-parameter action
// tau.(x,y) = (tau x, tau^{-1} y), and classify the orbits by type.
inline HopfCensus hopf_orbit_census(std::uint32_t q,
                                    std::uint64_t cap = Caps().enumeration) {
  auto points = exactalg::enumerate_points(exactalg::CoordinateRing::hopf(), q, cap);

  HopfCensus census;
  census.q = q;
  census.total = points.size();

  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> visited;
  for (const auto& p : points) visited[{p[0], p[1]}] = false;

  for (const auto& p : points) {
    auto key = std::make_pair(p[0], p[1]);
    if (visited[key]) continue;
    // Walk the orbit.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> orbit;
    exactalg::Fp x(p[0], q), y(p[1], q);
    for (std::uint32_t t = 1; t < q; ++t) {
      exactalg::Fp tau(t, q);
      exactalg::Fp ox = tau * x;
      exactalg::Fp oy = tau.inverse() * y;
      auto okey = std::make_pair(ox.value(), oy.value());
      if (!visited[okey]) {
        visited[okey] = true;
        orbit.push_back(okey);
      }
    }
    if (p[0] == 0 && p[1] == 0) {
      census.fixed_points += 1;
    } else if (p[1] == 0) {
      census.orbit_x_size = orbit.size();
    } else if (p[0] == 0) {
      census.orbit_y_size = orbit.size();
    } else {
      census.free_alpha_orbits += 1;
      census.free_alpha_orbit_size = orbit.size();
    }
  }
  return census;
}

// ---------------------------------------------------------------------------
// Local-to-global verification: the symbolic HO value of the lift over the
// full representation space must be an honest polynomial (no negative
// exponents, no denominators), and it must agree with the chart holonomy
// trace at random invertible points.

struct VerifyReport {
  int spikes = 0;
  int rank = 0;
  std::uint32_t q = 5;
  std::uint64_t seed = 0;
  LaurentPoly polynomial;
  bool nonnegative_exponents = false;
  int checks = 0;
  int matches = 0;
};

namespace detail {

inline Matrix<Scalar> random_invertible_matrix(int r, std::uint32_t q, Rng& rng) {
  for (;;) {
    Matrix<Scalar> m(r, r, Scalar::fp(0, q));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m.at(i, j) = Scalar::fp(rng.below(q), q);
    // Row-reduce a copy to test invertibility.
    Matrix<Scalar> a = m;
    bool singular = false;
    for (int c = 0; c < r && !singular; ++c) {
      int piv = -1;
      for (int i = c; i < r; ++i)
        if (!a.at(i, c).is_zero()) { piv = i; break; }
      if (piv < 0) { singular = true; break; }
      for (int j = 0; j < r; ++j) std::swap(a.a[static_cast<size_t>(piv) * r + j],
                                            a.a[static_cast<size_t>(c) * r + j]);
      Scalar inv = a.at(c, c).inverse();
      for (int j = 0; j < r; ++j) a.at(c, j) = a.at(c, j) * inv;
      for (int i = 0; i < r; ++i) {
        if (i == c || a.at(i, c).is_zero()) continue;
        Scalar f = a.at(i, c);
        for (int j = 0; j < r; ++j) a.at(i, j) = a.at(i, j) - f * a.at(c, j);
      }
    }
    if (!singular) return m;
  }
}

}  // namespace detail

inline VerifyReport verify_local_to_global(int spikes, int rank, std::uint32_t q,
                                           std::uint64_t seed, int checks = 50,
                                           int spike_cap = 4, int rank_cap = 3) {
  if (spikes < 1 || rank < 1) throw PreconditionError("verify: spikes and rank must be >= 1");
  if (spikes > spike_cap || rank > rank_cap)
    throw exactalg::CapExceededError("verify: spikes/rank beyond symbolic caps");
  if (!exactalg::is_prime_u32(q)) throw PreconditionError("verify: q must be prime");

  VerifyReport report;
  report.spikes = spikes;
  report.rank = rank;
  report.q = q;
  report.seed = seed;
  report.checks = checks;

  // Symbolic route: HO of the full-cycle lift over the representation space,
  // with chart variables named x1..xn (entries xi_rc at rank >= 2).
  std::vector<std::string> labels;
  for (int i = 1; i <= spikes; ++i) labels.push_back("x" + std::to_string(i));
  Quiver quiver = Quiver::cyclic_labeled(labels);
  std::vector<int> dims(static_cast<size_t>(spikes), rank);
  auto chart = quiverhh::rep_moduli_chart(quiver, dims, /*invertible_chart=*/true);
  auto rep = quiverhh::symbolic_representation(quiver, dims, chart);

  std::vector<int> full_cycle(static_cast<size_t>(spikes));
  for (int i = 0; i < spikes; ++i) full_cycle[static_cast<size_t>(i)] = i;
  TraceChain chain = TraceChain::single(quiverhh::canonicalize_cycle(quiver, full_cycle));

  report.polynomial = quiverhh::ho_trace_symbolic(chain, rep);
  report.nonnegative_exponents = !report.polynomial.has_negative_exponent();

  // Numeric route: chart holonomy trace at random invertible points. At rank
  // one this goes through merodromy, at higher rank through the matrix
  // parallel transport.
  Rng rng(seed);
  for (int c = 0; c < checks; ++c) {
    std::vector<Matrix<Scalar>> mats;
    for (int i = 0; i < spikes; ++i)
      mats.push_back(detail::random_invertible_matrix(rank, q, rng));

    // Evaluate the symbolic polynomial at the sampled entries.
    std::vector<Scalar> point;
    for (int i = 0; i < spikes; ++i)
      for (int r = 0; r < rank; ++r)
        for (int cc = 0; cc < rank; ++cc) point.push_back(mats[static_cast<size_t>(i)].at(r, cc));
    Scalar symbolic = report.polynomial.evaluate(point, q);

    Scalar chart_value = Scalar::fp(0, q);
    if (rank == 1) {
      ChartPoint cp;
      for (int i = 0; i < spikes; ++i) cp.coords.push_back(mats[static_cast<size_t>(i)].at(0, 0));
      chart_value = merodromy(cp, std::vector<long>(static_cast<size_t>(spikes), 1));
    } else {
      Matrix<Scalar> acc(rank, rank, Scalar::fp(0, q));
      for (int i = 0; i < rank; ++i) acc.at(i, i) = Scalar::fp(1, q);
      for (int i = 0; i < spikes; ++i)
        acc = quiverhh::matmul(mats[static_cast<size_t>(i)], acc, Scalar::fp(0, q));
      chart_value = quiverhh::mat_trace(acc, Scalar::fp(0, q));
    }
    if (symbolic == chart_value) ++report.matches;
  }
  return report;
}

}  // namespace mero::holonomy
