#include "merolib/holonomy.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mero::holonomy;
using mero::exactalg::LaurentPoly;
using mero::exactalg::parse_poly;
using mero::exactalg::PreconditionError;
using mero::exactalg::Scalar;

TEST_CASE("intersection vectors") {
  REQUIRE(intersection_vector(CrossingWord::parse("+1,+2", 2)) == std::vector<long>{1, 1});
  REQUIRE(intersection_vector(CrossingWord::parse("+1,-1", 1)) == std::vector<long>{0});
  REQUIRE(intersection_vector(CrossingWord::parse("-2,-2,+1", 2)) == std::vector<long>{1, -2});
}

TEST_CASE("positivity modes") {
  auto both = CrossingWord::parse("+1,+2");
  REQUIRE(is_positive(both, PositivityMode::Geometric));
  REQUIRE(is_positive(both, PositivityMode::Homological));

  auto cancel = CrossingWord::parse("+1,-1");
  REQUIRE(is_positive(cancel, PositivityMode::Homological));
  REQUIRE(is_positive(cancel, PositivityMode::Geometric));  // reduces to the empty word

  auto mixed = CrossingWord::parse("-1,+2,+2");
  REQUIRE_FALSE(is_positive(mixed, PositivityMode::Homological));
  REQUIRE_FALSE(is_positive(mixed, PositivityMode::Geometric));

  // Homologically positive but geometrically blocked: the -1 crossing never
  // cancels because its partners are separated by other disks.
  auto blocked = CrossingWord::parse("+1,+2,-1,+2,+1,+2");
  REQUIRE(is_positive(blocked, PositivityMode::Homological));
  REQUIRE_FALSE(is_positive(blocked, PositivityMode::Geometric));
}

TEST_CASE("cancellation preserves the intersection vector") {
  auto w = CrossingWord::parse("+1,+2,-2,+3,-1,+1");
  auto reduced = cyclic_reduce(w);
  std::vector<long> after(static_cast<size_t>(w.disks), 0);
  for (const auto& rc : reduced) after[static_cast<size_t>(rc.crossing.disk - 1)] +=
      rc.crossing.sign;
  REQUIRE(after == intersection_vector(w));
}

TEST_CASE("local lift of a positive word is the full cycle") {
  auto lift = local_lift(CrossingWord::parse("+1,+2,+1"));
  REQUIRE(lift.reduced_length == 3);
  REQUIRE(lift.quiver.n == 3);
  REQUIRE(lift.chain.terms.size() == 1);
  REQUIRE(lift.chain.terms[0].second.str(lift.quiver) == "[a1,a2,a3]");
}

TEST_CASE("negative crossings are rejected with the offending index") {
  try {
    local_lift(CrossingWord::parse("-3"));
    FAIL("expected rejection");
  } catch (const PositivityError& e) {
    REQUIRE(e.offending_index == 0);
  }
  try {
    local_lift(CrossingWord::parse("+1,-2,+1"));
    FAIL("expected rejection");
  } catch (const PositivityError& e) {
    REQUIRE(e.offending_index == 1);
  }
}

TEST_CASE("empty reduced word degenerates to the circle model") {
  auto lift = local_lift(CrossingWord::parse(""));
  REQUIRE(lift.reduced_length == 0);
  REQUIRE(lift.quiver.n == 1);
  REQUIRE(lift.chain.terms[0].second.str(lift.quiver) == "[t]");

  auto cancelled = local_lift(CrossingWord::parse("+2,-2"));
  REQUIRE(cancelled.reduced_length == 0);
}

TEST_CASE("lift is invariant under rotation of the crossing word") {
  auto base = CrossingWord::parse("+1,+2,+3");
  auto l0 = local_lift(base);
  for (size_t r = 1; r < 3; ++r) {
    CrossingWord rot;
    rot.disks = base.disks;
    for (size_t i = 0; i < base.crossings.size(); ++i)
      rot.crossings.push_back(base.crossings[(i + r) % base.crossings.size()]);
    auto lr = local_lift(rot);
    REQUIRE(lr.chain.terms[0].second.str(lr.quiver) ==
            l0.chain.terms[0].second.str(l0.quiver));
  }
  // Rotation can move a cancelling pair across the seam.
  REQUIRE(local_lift(CrossingWord::parse("-1,+2,+1")).reduced_length == 1);
}

TEST_CASE("chart restriction sends cycle powers to rho powers") {
  auto lift = local_lift(CrossingWord::parse("+1,+1"));
  REQUIRE(restrict_to_chart(lift) == parse_poly("rho", {"rho"}));

  // rho^2 and idempotent components.
  LocalLift synthetic = lift;
  std::vector<int> doubled = {0, 1, 0, 1};
  synthetic.chain = mero::quiverhh::TraceChain::single(
      mero::quiverhh::canonicalize_cycle(synthetic.quiver, doubled));
  REQUIRE(restrict_to_chart(synthetic) == parse_poly("rho^2", {"rho"}));

  synthetic.chain = mero::quiverhh::TraceChain::single(mero::quiverhh::idempotent(1));
  REQUIRE(restrict_to_chart(synthetic) == parse_poly("1", {"rho"}));
}

TEST_CASE("merodromy is the monomial of the class") {
  ChartPoint p{{Scalar(2), Scalar(3)}};
  REQUIRE(merodromy(p, {0, 0}) == Scalar(1));
  REQUIRE(merodromy(p, {1, 1}) == Scalar(6));
  ChartPoint five{{Scalar(5)}};
  REQUIRE(merodromy(five, {-1}) == Scalar::rational(1, 5));
  REQUIRE_THROWS_AS(merodromy(ChartPoint{{Scalar(0)}}, {1}), PreconditionError);
  // Multiplicative in the class.
  REQUIRE(merodromy(p, {3, 2}) == merodromy(p, {1, 2}) * merodromy(p, {2, 0}));
}

TEST_CASE("ho_on_moduli evaluates traces, also off the invertible chart") {
  auto lift = local_lift(CrossingWord::parse("+1,+2"));
  KnModuliPoint ones{1, {mero::quiverhh::Matrix<Scalar>(1, 1, Scalar(1)),
                         mero::quiverhh::Matrix<Scalar>(1, 1, Scalar(1))}};
  REQUIRE(ho_on_moduli(lift, ones) == Scalar(1));

  KnModuliPoint off{1, {mero::quiverhh::Matrix<Scalar>(1, 1, Scalar(0)),
                        mero::quiverhh::Matrix<Scalar>(1, 1, Scalar(5))}};
  REQUIRE(ho_on_moduli(lift, off) == Scalar(0));

  // Rank 2: trace of the product, whichever rotation.
  mero::quiverhh::Matrix<Scalar> A(2, 2, Scalar(0)), B(2, 2, Scalar(0));
  A.at(0, 0) = Scalar(1); A.at(0, 1) = Scalar(2); A.at(1, 0) = Scalar(3); A.at(1, 1) = Scalar(4);
  B.at(0, 0) = Scalar(2); B.at(0, 1) = Scalar(-1); B.at(1, 0) = Scalar(0); B.at(1, 1) = Scalar(1);
  KnModuliPoint rank2{2, {A, B}};
  Scalar tr_ab = ho_on_moduli(lift, rank2);
  KnModuliPoint rank2_swapped{2, {B, A}};
  REQUIRE(tr_ab == ho_on_moduli(lift, rank2_swapped));
}

TEST_CASE("hopf action examples and identities") {
  HopfPoint p{Scalar(3), Scalar(4)};
  auto id = hopf_action(Scalar(1), Scalar(1), p);
  REQUIRE(id.x == Scalar(3));
  REQUIRE(id.y == Scalar(4));

  auto diag = hopf_action(Scalar(7), Scalar(7), p);
  REQUIRE(diag.x == Scalar(3));
  REQUIRE(diag.y == Scalar(4));

  auto moved = hopf_action(Scalar(2), Scalar(1), p);
  REQUIRE(moved.x == Scalar(6));
  REQUIRE(moved.y == Scalar(2));

  REQUIRE_THROWS_AS(hopf_action(Scalar(0), Scalar(1), p), PreconditionError);

  auto [xp, yp] = hopf_action_symbolic();
  const auto& vars = xp.vars();
  REQUIRE(xp * yp == parse_poly("x*y", vars));  // 1 + xy preserved exactly
}

TEST_CASE("hopf orbit census at small primes") {
  auto c3 = hopf_orbit_census(3);
  REQUIRE(c3.total == 7);
  REQUIRE(c3.free_alpha_orbits == 1);
  REQUIRE(c3.free_alpha_orbit_size == 2);
  REQUIRE(c3.orbit_x_size == 2);
  REQUIRE(c3.orbit_y_size == 2);
  REQUIRE(c3.fixed_points == 1);

  auto c2 = hopf_orbit_census(2);
  REQUIRE(c2.total == 3);
  REQUIRE(c2.free_alpha_orbits == 0);
  REQUIRE(c2.orbit_x_size == 1);
  REQUIRE(c2.orbit_y_size == 1);
  REQUIRE(c2.fixed_points == 1);

  auto c5 = hopf_orbit_census(5);
  REQUIRE(c5.total == 21);
  REQUIRE(c5.free_alpha_orbits == 3);
  REQUIRE(c5.free_alpha_orbit_size == 4);
}

TEST_CASE("rank-1 moduli traces equal merodromy at every invertible F_5 point") {
  for (int n = 1; n <= 3; ++n) {
    std::string word;
    for (int i = 0; i < n; ++i) word += (i ? ",+1" : "+1");
    auto lift = local_lift(CrossingWord::parse(word));
    std::vector<std::uint32_t> assign(static_cast<size_t>(n), 1);
    bool done = false;
    while (!done) {
      KnModuliPoint point;
      point.rank = 1;
      ChartPoint chart;
      for (auto v : assign) {
        point.mats.push_back(mero::quiverhh::Matrix<Scalar>(1, 1, Scalar::fp(v, 5)));
        chart.coords.push_back(Scalar::fp(v, 5));
      }
      REQUIRE(ho_on_moduli(lift, point) ==
              merodromy(chart, std::vector<long>(static_cast<size_t>(n), 1)));
      // Odometer over (F_5^*)^n.
      done = true;
      for (size_t i = assign.size(); i-- > 0;) {
        if (++assign[i] < 5) { done = false; break; }
        assign[i] = 1;
      }
    }
  }
}

TEST_CASE("verify_local_to_global on the documented small cases") {
  auto r21 = verify_local_to_global(2, 1, 5, 7);
  REQUIRE(r21.polynomial == parse_poly("x1*x2", r21.polynomial.vars()));
  REQUIRE(r21.matches == r21.checks);

  auto r12 = verify_local_to_global(1, 2, 5, 7);
  REQUIRE(r12.polynomial == parse_poly("x1_11 + x1_22", r12.polynomial.vars()));
  REQUIRE(r12.matches == r12.checks);

  REQUIRE_THROWS_AS(verify_local_to_global(9, 1, 5, 7),
                    mero::exactalg::CapExceededError);
}
