#include "merolib/representation.hpp"
#include "merolib/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mero::quiverhh;
using mero::exactalg::LaurentPoly;
using mero::exactalg::PreconditionError;
using mero::exactalg::Scalar;

TEST_CASE("idempotents pair to vertex dimensions") {
  Quiver a2;
  a2.n = 2;
  a2.arrows.push_back({1, 2, "a"});
  Representation<Scalar> rep;
  rep.quiver = a2;
  rep.dims = {3, 2};
  rep.mats.push_back(Matrix<Scalar>(2, 3, Scalar(0)));
  REQUIRE(ho_trace(TraceChain::single(idempotent(1)), rep) == Scalar(3));
  REQUIRE(ho_trace(TraceChain::single(idempotent(2)), rep) == Scalar(2));
}

TEST_CASE("full cycle on the symbolic rank-1 two-cycle gives x*y") {
  Quiver q = Quiver::cyclic_labeled({"x", "y"});
  std::vector<int> dims = {1, 1};
  auto chart = rep_moduli_chart(q, dims);
  REQUIRE(chart.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(chart.relations.empty());
  REQUIRE(chart.units.size() == 2);  // the 1x1 determinants x and y
  REQUIRE(chart.units[0] == LaurentPoly::variable(chart.vars, "x"));
  REQUIRE(chart.units[1] == LaurentPoly::variable(chart.vars, "y"));
  auto rep = symbolic_representation(q, dims, chart);
  auto chain = TraceChain::single(canonicalize_cycle(q, std::vector<int>{0, 1}));
  REQUIRE(ho_trace_symbolic(chain, rep) ==
          mero::exactalg::parse_poly("x*y", chart.vars));
}

TEST_CASE("commutator classes coincide and traces agree") {
  Quiver q;
  q.n = 1;
  q.arrows = {{1, 1, "a"}, {1, 1, "b"}};
  Representation<Scalar> rep;
  rep.quiver = q;
  rep.dims = {2};
  Matrix<Scalar> A(2, 2, Scalar(0)), B(2, 2, Scalar(0));
  A.at(0, 0) = Scalar(1); A.at(0, 1) = Scalar(2); A.at(1, 0) = Scalar(3); A.at(1, 1) = Scalar(4);
  B.at(0, 0) = Scalar(-1); B.at(0, 1) = Scalar(5); B.at(1, 1) = Scalar(2);
  rep.mats = {A, B};

  auto ab = canonicalize_cycle(q, std::vector<int>{0, 1});
  auto ba = canonicalize_cycle(q, std::vector<int>{1, 0});
  REQUIRE(ab == ba);

  TraceChain diff;
  diff.terms.push_back({Scalar(1), ab});
  diff.terms.push_back({Scalar(-1), ba});
  REQUIRE(ho_trace(diff, rep).is_zero());

  // tr(AB) = tr(BA) on the raw walks too.
  REQUIRE(walk_map_trace(rep, std::vector<int>{0, 1}, Scalar(0), Scalar(1)) ==
          walk_map_trace(rep, std::vector<int>{1, 0}, Scalar(0), Scalar(1)));
}

TEST_CASE("cycle traces are rotation invariant symbolically (rank 2, n = 3)") {
  Quiver q = Quiver::cyclic(3);
  std::vector<int> dims = {2, 2, 2};
  auto chart = rep_moduli_chart(q, dims);
  auto rep = symbolic_representation(q, dims, chart);
  LaurentPoly zero = LaurentPoly::zero(chart.vars);
  LaurentPoly one = LaurentPoly::one(chart.vars);
  auto t1 = walk_map_trace(rep, std::vector<int>{0, 1, 2}, zero, one);
  auto t2 = walk_map_trace(rep, std::vector<int>{1, 2, 0}, zero, one);
  auto t3 = walk_map_trace(rep, std::vector<int>{2, 0, 1}, zero, one);
  REQUIRE(t1 == t2);
  REQUIRE(t2 == t3);
}

TEST_CASE("moduli charts of the documented small quivers") {
  auto loop_ring = rep_moduli_chart(Quiver::loop(), {1});
  REQUIRE(loop_ring.vars == std::vector<std::string>{"t"});
  REQUIRE(loop_ring.units.size() == 1);

  Quiver a2;
  a2.n = 2;
  a2.arrows.push_back({1, 2, "a"});
  auto a2_ring = rep_moduli_chart(a2, {1, 1});
  REQUIRE(a2_ring.vars == std::vector<std::string>{"a"});
  REQUIRE(a2_ring.relations.empty());

  auto rank2 = rep_moduli_chart(Quiver::loop("t"), {2});
  REQUIRE(rank2.vars == std::vector<std::string>{"t_11", "t_12", "t_21", "t_22"});
  REQUIRE(rank2.units.size() == 1);
  REQUIRE(rank2.units[0] ==
          mero::exactalg::parse_poly("t_11*t_22 - t_12*t_21", rank2.vars));
}

TEST_CASE("shape mismatches are rejected") {
  Quiver q = Quiver::cyclic(2);
  Representation<Scalar> rep;
  rep.quiver = q;
  rep.dims = {1, 2};
  rep.mats = {Matrix<Scalar>(1, 1, Scalar(1)), Matrix<Scalar>(1, 2, Scalar(1))};
  REQUIRE_THROWS_AS(rep.validate(), PreconditionError);
  REQUIRE_THROWS_AS(ho_trace(TraceChain::single(idempotent(1)), rep), PreconditionError);
}

TEST_CASE("variable cap on symbolic charts") {
  REQUIRE_THROWS_AS(rep_moduli_chart(Quiver::cyclic(4), {6, 6, 6, 6}, true, 100),
                    mero::exactalg::CapExceededError);
}
