// End-to-end walk through the holonomy pipeline: a crossing word passes the
// positivity gate, lifts to the full-cycle trace class, restricts to the
// chart monomial, and its symbolic trace on the representation space is an
// honest polynomial that matches parallel transport at sample points.

#include "merolib/holonomy.hpp"

#include <cstdio>

using namespace mero;

int main() {
  const char* words[] = {"+1,+2,+1", "+1,-1,+2", "-1,+2"};
  for (const char* text : words) {
    auto w = holonomy::CrossingWord::parse(text);
    std::printf("word \"%s\": ", text);
    try {
      auto lift = holonomy::local_lift(w);
      std::printf("lift %s, chart %s, ",
                  lift.chain.terms[0].second.str(lift.quiver).c_str(),
                  holonomy::restrict_to_chart(lift).str().c_str());
      auto report = holonomy::verify_local_to_global(
          std::max<int>(1, static_cast<int>(lift.reduced_length)), 2, 5, 7, 20);
      std::printf("HO = %s, chart agreement %d/%d\n", report.polynomial.str().c_str(),
                  report.matches, report.checks);
    } catch (const holonomy::PositivityError& e) {
      std::printf("rejected (%s)\n", e.what());
    }
  }
  return 0;
}
