#include "merolib/quiver.hpp"
#include "merolib/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mero::quiverhh;
using mero::exactalg::CapExceededError;
using mero::exactalg::PreconditionError;

TEST_CASE("cyclic quiver trace space: only powers of the full cycle close up") {
  Quiver q = Quiver::cyclic(3);
  auto ts = trace_space(q, 7);
  REQUIRE(ts.dimension() == 5);
  std::vector<std::string> names;
  for (const auto& b : ts.basis) names.push_back(b.str(q));
  REQUIRE(names == std::vector<std::string>{"e1", "e2", "e3", "[a1,a2,a3]",
                                            "[a1,a2,a3,a1,a2,a3]"});
}

TEST_CASE("linear quiver has only idempotents") {
  Quiver a2;
  a2.n = 2;
  a2.arrows.push_back({1, 2, "a"});
  auto ts = trace_space(a2, 9);
  REQUIRE(ts.dimension() == 2);
}

TEST_CASE("loop quiver truncates to 1 + L classes") {
  auto ts = trace_space(Quiver::loop(), 4);
  REQUIRE(ts.dimension() == 5);  // e, t, t^2, t^3, t^4
}

TEST_CASE("cyclic dimension formula n + floor(L/n)") {
  for (int n = 1; n <= 6; ++n)
    for (int L = 0; L <= 12; ++L)
      REQUIRE(trace_space(Quiver::cyclic(n), L).dimension() ==
              static_cast<size_t>(n + L / n));
}

TEST_CASE("canonicalize_cycle picks the least rotation") {
  Quiver q = Quiver::cyclic(3);
  auto c1 = canonicalize_cycle(q, std::vector<std::string>{"a2", "a3", "a1"});
  auto c2 = canonicalize_cycle(q, std::vector<std::string>{"a1", "a2", "a3"});
  REQUIRE(c1 == c2);
  REQUIRE(c1.str(q) == "[a1,a2,a3]");

  auto rho2 = canonicalize_cycle(q, std::vector<std::string>{"a3", "a1", "a2", "a3", "a1", "a2"});
  REQUIRE(rho2.str(q) == "[a1,a2,a3,a1,a2,a3]");

  Quiver l = Quiver::loop();
  REQUIRE(canonicalize_cycle(l, std::vector<std::string>{"t"}).str(l) == "[t]");
}

TEST_CASE("canonicalize_cycle rejects open walks") {
  Quiver q = Quiver::cyclic(3);
  REQUIRE_THROWS_AS(canonicalize_cycle(q, std::vector<std::string>{"a1", "a2"}),
                    PreconditionError);
}

TEST_CASE("rotation invariance on random closed walks") {
  mero::Rng rng(5);
  Quiver q;
  q.n = 2;
  q.arrows = {{1, 1, "s"}, {1, 2, "u"}, {2, 1, "d"}, {2, 2, "l"}};
  auto ts = trace_space(q, 6);
  for (const auto& b : ts.basis) {
    if (b.is_idempotent()) continue;
    // Rotate the canonical walk arbitrarily; the class must not change.
    size_t r = rng.below(b.arrows.size());
    std::vector<int> rot(b.arrows.begin() + r, b.arrows.end());
    rot.insert(rot.end(), b.arrows.begin(), b.arrows.begin() + r);
    REQUIRE(canonicalize_cycle(q, rot) == b);
  }
}

TEST_CASE("walk cap guards against explosion") {
  Quiver q;
  q.n = 1;
  for (int i = 0; i < 6; ++i) q.arrows.push_back({1, 1, "l" + std::to_string(i)});
  REQUIRE_THROWS_AS(trace_space(q, 8, 1000), CapExceededError);
}

TEST_CASE("quiver file format") {
  Quiver q = Quiver::parse("2\n1 2 up\n2 1 down\n");
  REQUIRE(q.n == 2);
  REQUIRE(q.arrows.size() == 2);
  auto ts = trace_space(q, 4);
  REQUIRE(ts.dimension() == 2 + 2);  // [up,down] and [up,down,up,down]
  REQUIRE_THROWS_AS(Quiver::parse("1\n1 2 a\n"), PreconditionError);
  REQUIRE_THROWS_AS(Quiver::parse("2\n1 2 a\n2 1 a\n"), PreconditionError);
}
