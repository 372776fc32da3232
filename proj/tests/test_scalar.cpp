#include "merolib/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mero::exactalg;

TEST_CASE("prime field axioms hold exactly") {
  const std::uint32_t q = 19;
  Fp one(1, q), zero(0, q);
  for (std::uint32_t i = 0; i < q; ++i) {
    Fp a(i, q);
    REQUIRE(zero - a == -a);
    for (std::uint32_t j = 0; j < q; ++j) {
      Fp b(j, q);
      REQUIRE(a * b == b * a);
      REQUIRE(a + b == b + a);
      for (std::uint32_t k = 0; k < q; ++k) {
        Fp c(k, q);
        REQUIRE(a * c + b * c == (a + b) * c);
        REQUIRE((a * b) * c == a * (b * c));
      }
    }
    if (!a.is_zero()) {
      REQUIRE(a * a.inverse() == one);
      REQUIRE(one / (one / a) == a);
    }
  }
}

TEST_CASE("prime field stores reduced values") {
  Fp a(25, 7);
  REQUIRE(a.value() == 4);
  REQUIRE(Fp::from_int(-3, 7).value() == 4);
  REQUIRE_THROWS_AS(Fp(1, 7).inverse() + Fp(1, 5), ArithmeticError);
}

TEST_CASE("rational scalars are exact") {
  Scalar a = Scalar::rational(1, 3);
  Scalar b = Scalar::rational(2, 5);
  REQUIRE((a * b).str() == "2/15");
  REQUIRE((a + b).str() == "11/15");
  REQUIRE((a - a).is_zero());
  REQUIRE(a.pow(-2).str() == "9");
  REQUIRE_THROWS_AS(Scalar(0).inverse(), ArithmeticError);
}

TEST_CASE("scalar modes do not mix implicitly") {
  REQUIRE_THROWS_AS(Scalar(1) + Scalar::fp(1, 5), ArithmeticError);
  REQUIRE(Scalar::rational(1, 3).to_fp(5) == Scalar::fp(2, 5));  // 3 * 2 = 6 = 1 mod 5
  REQUIRE_THROWS_AS(Scalar::rational(1, 5).to_fp(5), ArithmeticError);
}

TEST_CASE("primality test") {
  REQUIRE(is_prime_u32(2));
  REQUIRE(is_prime_u32(3));
  REQUIRE(is_prime_u32(7919));
  REQUIRE(is_prime_u32(2147483647u));  // 2^31 - 1
  REQUIRE_FALSE(is_prime_u32(1));
  REQUIRE_FALSE(is_prime_u32(9));
  REQUIRE_FALSE(is_prime_u32(7917));
}
