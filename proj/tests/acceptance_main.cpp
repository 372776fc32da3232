// Acceptance battery runner: executes every criterion at its stated
// tolerance (all exact) and prints one pass/fail line per criterion.

#include "merolib/cli.hpp"

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  for (int i = 1; i + 1 < argc + 1; ++i) {
    if (i < argc && std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed = std::stoull(argv[i + 1]);
  }

  auto hook = [](const std::vector<std::string>& args) {
    auto res = mero::cli::dispatch(args);
    return std::make_pair(res.exit_code, res.report);
  };

  auto results = mero::suite::run_acceptance(seed, hook);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.description.c_str());
    if (!r.pass) {
      ++failures;
      std::printf("  details: %s\n", r.details.dump().c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
