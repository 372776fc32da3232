#include "merolib/laurent.hpp"
#include "merolib/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mero::exactalg;

static const std::vector<std::string> XY = {"x", "y"};

TEST_CASE("poly_op examples") {
  auto lhs = parse_poly("x+y", XY);
  auto rhs = parse_poly("x-y", XY);
  REQUIRE(poly_op(lhs, rhs, PolyOp::Add) == parse_poly("2*x", XY));

  auto x = LaurentPoly::variable(XY, "x");
  auto xinv = LaurentPoly::variable(XY, "x", -1);
  REQUIRE(poly_op(x, xinv, PolyOp::Mul) == LaurentPoly::one(XY));

  auto a = parse_poly("1+x*y", XY);
  auto b = parse_poly("1-x*y", XY);
  REQUIRE(poly_op(a, b, PolyOp::Mul) == parse_poly("1 - x^2*y^2", XY));
}

TEST_CASE("arity mismatch is an error") {
  auto f = parse_poly("x", {"x"});
  auto g = parse_poly("x", {"x", "y"});
  REQUIRE_THROWS_AS(f + g, PreconditionError);
}

TEST_CASE("evaluate examples") {
  auto f = parse_poly("1+x*y", XY);
  REQUIRE(f.evaluate({Scalar(1), Scalar(2)}, 7) == Scalar::fp(3, 7));

  auto xinv = LaurentPoly::variable({"x"}, "x", -1);
  REQUIRE_THROWS_AS(xinv.evaluate({Scalar(0)}), ArithmeticError);

  auto g = parse_poly("x^2+1", {"x"});
  REQUIRE(g.evaluate({Scalar(2)}, 5) == Scalar::fp(0, 5));
}

TEST_CASE("parser handles the documented grammar") {
  REQUIRE(parse_poly("x^-1*y^2", XY) ==
          LaurentPoly::monomial(XY, {-1, 2}, Scalar(1)));
  REQUIRE(parse_poly("-(x - y)", XY) == parse_poly("y - x", XY));
  REQUIRE(parse_poly("2*(x+y)^2", XY) ==
          parse_poly("2*x^2 + 4*x*y + 2*y^2", XY));
  REQUIRE_THROWS_AS(parse_poly("x + *", XY), PreconditionError);
  REQUIRE_THROWS_AS(parse_poly("z", XY), PreconditionError);
  // No implicit multiplication.
  REQUIRE_THROWS_AS(parse_poly("2x", XY), PreconditionError);
}

TEST_CASE("printing round-trips through the parser") {
  mero::Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly p = LaurentPoly::zero(XY);
    int terms = static_cast<int>(rng.range(1, 6));
    for (int t = 0; t < terms; ++t) {
      ExpVec e = {static_cast<int>(rng.range(-3, 3)), static_cast<int>(rng.range(-3, 3))};
      long long c = rng.range(-5, 5);
      if (c == 0) c = 2;
      p = p + LaurentPoly::monomial(XY, e, Scalar(c));
    }
    REQUIRE(parse_poly(p.str(), XY) == p);
  }
}

TEST_CASE("substitution composes") {
  auto f = parse_poly("1 + x*y", XY);
  std::vector<std::string> tv = {"s", "t"};
  std::vector<LaurentPoly> images = {parse_poly("s^2", tv), parse_poly("t - s", tv)};
  REQUIRE(f.substitute(images) == parse_poly("1 + s^2*t - s^3", tv));
}
