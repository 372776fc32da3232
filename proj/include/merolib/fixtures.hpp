#pragma once

// The fixture corpus: crossing words for the positivity/lift pipeline and
// braid words for the variety presentations. The same data is shipped as
// JSON files under fixtures/; a unit test keeps the two in sync.

#include <stdexcept>
#include <string>
#include <vector>

namespace mero::fixtures {

// Thirty geometric-positive crossing words, reduced length <= 6. Some only
// become positive after free cancellation; the empty word is the degenerate
// circle model.
inline const std::vector<std::string>& positive_crossing_words() {
  static const std::vector<std::string> words = {
      "",
      "+1",
      "+1,+1",
      "+1,+2",
      "+1,+2,+1",
      "+1,+1,+1",
      "+2,+1,+2",
      "+1,+2,+3",
      "+1,+2,+1,+2",
      "+1,+1,+2,+2",
      "+3,+2,+1",
      "+1,+2,+3,+4",
      "+1,+1,+1,+1",
      "+2,+2,+1,+1,+2",
      "+1,+2,+3,+2,+1",
      "+1,+1,+1,+1,+1",
      "+1,+2,+1,+2,+1,+2",
      "+4,+3,+2,+1,+1",
      "+1,+1,+2,+2,+3,+3",
      "+2,+1,+2,+1,+2,+1",
      "+1,-1,+2",
      "+1,+1,-1",
      "-1,+2,+1",
      "+2,-2",
      "+1,-1,+1,-1",
      "+3,+3,-3",
      "+1,+2,-2,+3",
      "+1,+2,-2,-1,+4",
      "+5,+4,-4,+5",
      "+1,+2,+2,-2",
  };
  return words;
}

// Words with a surviving negative crossing; the lift must reject every one.
inline const std::vector<std::string>& negative_crossing_words() {
  static const std::vector<std::string> words = {
      "-1",
      "-1,-2",
      "+1,-2",
      "-1,-1,+1",
      "+1,-2,+1",
      "-3",
      "+1,+1,-1,-1,-1",
      "-2,+1,+1",
      "+1,-1,-2",
      "-1,+2,-1,+2",
  };
  return words;
}

struct BraidFixture {
  std::string name;
  int strands;
  std::vector<int> word;
  bool full_demazure;  // whether the Demazure product is the longest element
};

inline const std::vector<BraidFixture>& braid_words() {
  static const std::vector<BraidFixture> words = {
      {"one_crossing", 2, {1}, true},
      {"unknot_type", 2, {1, 1}, true},
      {"hopf_type", 2, {1, 1, 1}, true},
      {"trefoil_type", 2, {1, 1, 1, 1}, true},
      {"five_twist", 2, {1, 1, 1, 1, 1}, true},
      {"w0_three_strands", 3, {1, 2, 1}, true},
      {"w0_three_strands_alt", 3, {2, 1, 2}, true},
      {"w0_plus_one", 3, {1, 2, 1, 1}, true},
      {"w0_doubled_letter", 3, {1, 1, 2, 1}, true},
      {"w0_four_strands", 4, {1, 2, 1, 3, 2, 1}, true},
      {"not_full_single", 3, {1, 1}, false},
      {"not_full_commuting", 4, {1, 3}, false},
  };
  return words;
}

// The 2-strand word whose variety carries the Hopf-type point count; its
// measured torus exponent is recorded by the suite.
inline const BraidFixture& hopf_type_word() {
  for (const auto& f : braid_words())
    if (f.name == "hopf_type") return f;
  throw std::runtime_error("fixture corpus: hopf_type missing");
}

}  // namespace mero::fixtures
