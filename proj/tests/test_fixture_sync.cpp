// The fixture corpus ships both as JSON files and as embedded data; this
// keeps the two in sync.

#include "merolib/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <fstream>

TEST_CASE("crossing word fixtures match the shipped JSON") {
  std::ifstream f(std::string(MEROLIB_SOURCE_DIR) + "/fixtures/crossing_words.json");
  REQUIRE(f.good());
  auto j = nlohmann::json::parse(f);
  REQUIRE(j["positive"].get<std::vector<std::string>>() ==
          mero::fixtures::positive_crossing_words());
  REQUIRE(j["negative"].get<std::vector<std::string>>() ==
          mero::fixtures::negative_crossing_words());
  REQUIRE(mero::fixtures::positive_crossing_words().size() == 30);
}

TEST_CASE("braid word fixtures match the shipped JSON") {
  std::ifstream f(std::string(MEROLIB_SOURCE_DIR) + "/fixtures/braid_words.json");
  REQUIRE(f.good());
  auto j = nlohmann::json::parse(f);
  const auto& embedded = mero::fixtures::braid_words();
  REQUIRE(j.size() == embedded.size());
  for (size_t i = 0; i < embedded.size(); ++i) {
    REQUIRE(j[i]["name"] == embedded[i].name);
    REQUIRE(j[i]["strands"] == embedded[i].strands);
    REQUIRE(j[i]["word"].get<std::vector<int>>() == embedded[i].word);
    REQUIRE(j[i]["full_demazure"] == embedded[i].full_demazure);
  }
}
