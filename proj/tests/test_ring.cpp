#include "merolib/ring.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mero::exactalg;

TEST_CASE("localized Hopf ring has q^2 - q + 1 points") {
  auto hopf = CoordinateRing::hopf();
  // Brute-force derived: q^2 minus the q-1 points with xy = -1.
  REQUIRE(count_points(hopf, 2) == 3);
  REQUIRE(count_points(hopf, 3) == 7);
  REQUIRE(count_points(hopf, 5) == 21);
  REQUIRE(count_points(hopf, 7) == 43);
}

TEST_CASE("unit ideal has no points") {
  CoordinateRing ring = CoordinateRing::polynomial_ring({"x", "y"});
  ring.relations.push_back(LaurentPoly::one(ring.vars));
  REQUIRE(count_points(ring, 5) == 0);
}

TEST_CASE("enumeration respects the cap") {
  CoordinateRing ring = CoordinateRing::polynomial_ring({"a", "b", "c", "d", "e"});
  REQUIRE_THROWS_AS(enumerate_points(ring, 101, 1000), CapExceededError);
}

TEST_CASE("points come in odometer order") {
  auto pts = enumerate_points(CoordinateRing::polynomial_ring({"x", "y"}), 2);
  REQUIRE(pts.size() == 4);
  REQUIRE(pts[0] == std::vector<std::uint32_t>{0, 0});
  REQUIRE(pts[1] == std::vector<std::uint32_t>{0, 1});
  REQUIRE(pts[2] == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("ring validation rejects Laurent relations") {
  CoordinateRing ring = CoordinateRing::polynomial_ring({"x"});
  ring.relations.push_back(LaurentPoly::variable(ring.vars, "x", -1));
  REQUIRE_THROWS_AS(ring.validate(), PreconditionError);
}

TEST_CASE("unit plausibility sampling accepts the Hopf unit") {
  REQUIRE(units_plausible(CoordinateRing::hopf(), {3, 5}));
  // A unit that lies in the ideal is caught by sampling.
  CoordinateRing bad = CoordinateRing::polynomial_ring({"x", "y"});
  bad.relations.push_back(parse_poly("x", bad.vars));
  bad.units.push_back(parse_poly("x", bad.vars));
  REQUIRE_FALSE(units_plausible(bad, {3, 5}));
}
