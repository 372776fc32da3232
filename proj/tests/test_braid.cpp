#include "merolib/braid.hpp"
#include "merolib/json_io.hpp"
#include "merolib/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mero::braidvar;
using mero::exactalg::LaurentPoly;
using mero::exactalg::parse_poly;
using mero::exactalg::PreconditionError;

TEST_CASE("demazure examples") {
  REQUIRE(demazure(BraidWord{2, {1}}) == Permutation::longest(2));
  // sigma_1 sigma_1: the second letter would shorten, so it is dropped.
  REQUIRE(demazure(BraidWord{2, {1, 1}}) == Permutation::longest(2));
  REQUIRE(demazure(BraidWord{3, {1, 2, 1}}) == Permutation::longest(3));
  REQUIRE(demazure(BraidWord{3, {1, 2}}).img == std::vector<int>{2, 3, 1});
  REQUIRE(demazure(BraidWord{3, {}}) == Permutation::identity(3));
}

TEST_CASE("reduced words multiply back to the permutation") {
  mero::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    int n = static_cast<int>(rng.range(2, 5));
    BraidWord w{n, {}};
    for (int k = 0; k < 6; ++k) w.letters.push_back(static_cast<int>(rng.range(1, n - 1)));
    auto d = demazure(w);
    auto rw = reduced_word(d);
    REQUIRE(static_cast<long>(rw.size()) == d.length());
    Permutation check = Permutation::identity(n);
    for (int s : rw) std::swap(check.img[static_cast<size_t>(s - 1)],
                               check.img[static_cast<size_t>(s)]);
    REQUIRE(check == d);
  }
}

TEST_CASE("braid matrix examples") {
  auto empty = braid_matrix_product(BraidWord{2, {}});
  REQUIRE(empty.at(0, 0) == LaurentPoly::one(empty.a[0].vars()));
  REQUIRE(empty.at(0, 1).is_zero());

  auto one = braid_matrix_product(BraidWord{2, {1}});
  const auto& v1 = one.a[0].vars();
  REQUIRE(one.at(0, 0) == parse_poly("z1", v1));
  REQUIRE(one.at(0, 1) == parse_poly("1", v1));
  REQUIRE(one.at(1, 0) == parse_poly("1", v1));
  REQUIRE(one.at(1, 1).is_zero());

  auto two = braid_matrix_product(BraidWord{2, {1, 1}});
  const auto& v2 = two.a[0].vars();
  REQUIRE(two.at(0, 0) == parse_poly("z1*z2 + 1", v2));
  REQUIRE(two.at(0, 1) == parse_poly("z1", v2));
  REQUIRE(two.at(1, 0) == parse_poly("z2", v2));
  REQUIRE(two.at(1, 1) == parse_poly("1", v2));
}

TEST_CASE("products are multiplicative over word splits") {
  mero::Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    int strands = static_cast<int>(rng.range(2, 4));
    int len = static_cast<int>(rng.range(1, 5));
    BraidWord w{strands, {}};
    for (int k = 0; k < len; ++k) w.letters.push_back(static_cast<int>(rng.range(1, strands - 1)));
    size_t cut = rng.below(static_cast<std::uint64_t>(len) + 1);
    BraidWord u{strands, {w.letters.begin(), w.letters.begin() + cut}};
    BraidWord v{strands, {w.letters.begin() + cut, w.letters.end()}};
    auto vars = braid_vars(w.length());
    auto full = braid_matrix_product(w, vars, 0);
    auto prod = mero::quiverhh::matmul(braid_matrix_product(u, vars, 0),
                                       braid_matrix_product(v, vars, cut),
                                       LaurentPoly::zero(vars));
    REQUIRE(full.a == prod.a);
  }
}

TEST_CASE("presentation for sigma_1 sigma_1") {
  auto pres = variety_presentation(BraidWord{2, {1, 1}});
  REQUIRE(pres.ring.vars == std::vector<std::string>{"z1", "z2"});
  REQUIRE(pres.ring.relations.size() == 1);
  REQUIRE(pres.ring.relations[0] == parse_poly("z1*z2 + 1", pres.ring.vars));
  REQUIRE(pres.ring.units.size() == 2);
  // The locus z1 z2 = -1 has q - 1 points.
  REQUIRE(count_points(pres, 2) == 1);
  REQUIRE(count_points(pres, 3) == 2);
  REQUIRE(count_points(pres, 5) == 4);
}

TEST_CASE("presentation for the reduced longest word is a single point") {
  auto pres = variety_presentation(BraidWord{3, {1, 2, 1}});
  REQUIRE(pres.ring.vars.size() == 3);
  REQUIRE(pres.ring.relations.size() == 3);
  for (std::uint32_t q : {2u, 3u, 5u}) REQUIRE(count_points(pres, q) == 1);
}

TEST_CASE("Hopf-type word counts match the orbit census totals") {
  auto pres = variety_presentation(BraidWord{2, {1, 1, 1}});
  REQUIRE(count_points(pres, 2) == 3);
  REQUIRE(count_points(pres, 3) == 7);
  REQUIRE(count_points(pres, 5) == 21);
  auto a = fit_torus_exponent({2, 3, 5}, {3, 7, 21});
  REQUIRE(a.has_value());
  REQUIRE(*a == 0);
}

TEST_CASE("torus exponent fitting") {
  REQUIRE(fit_torus_exponent({2, 3, 5}, {3, 14, 84}) == 1);
  REQUIRE(fit_torus_exponent({2, 3, 5}, {3, 28, 336}) == 2);
  REQUIRE_FALSE(fit_torus_exponent({2, 3, 5}, {4, 7, 21}).has_value());
  REQUIRE_FALSE(fit_torus_exponent({2, 3, 5}, {6, 7, 21}).has_value());
  REQUIRE_FALSE(fit_torus_exponent({2, 3, 5}, {3, 14, 21}).has_value());
  REQUIRE_FALSE(fit_torus_exponent({2, 3, 5}, {0, 0, 0}).has_value());
}

TEST_CASE("words without full Demazure product are rejected") {
  REQUIRE_THROWS_AS(variety_presentation(BraidWord{3, {1, 1}}), PreconditionError);
  REQUIRE_THROWS_AS(variety_presentation(BraidWord{4, {1, 3}}), PreconditionError);
  REQUIRE_THROWS_AS(variety_presentation(BraidWord{2, {}}), PreconditionError);
}

TEST_CASE("presentation JSON round trip") {
  auto pres = variety_presentation(BraidWord{3, {1, 2, 1, 1}});
  auto j = mero::io::presentation_to_json(pres);
  REQUIRE(j["convention"] == kConventionTag);
  auto back = mero::io::presentation_from_json(j);
  REQUIRE(back.strands == pres.strands);
  REQUIRE(back.word == pres.word);
  REQUIRE(back.ring.vars == pres.ring.vars);
  REQUIRE(back.ring.relations.size() == pres.ring.relations.size());
  for (size_t i = 0; i < back.ring.relations.size(); ++i)
    REQUIRE(back.ring.relations[i] == pres.ring.relations[i]);
  for (std::uint32_t q : {2u, 3u}) REQUIRE(count_points(back, q) == count_points(pres, q));
}

TEST_CASE("letters out of range are invalid") {
  REQUIRE_THROWS_AS(BraidWord({2, {2}}).validate(), PreconditionError);
  REQUIRE_THROWS_AS(BraidWord({1, {}}).validate(), PreconditionError);
}
