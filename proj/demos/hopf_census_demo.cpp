// Orbit census of the Hopf moduli X = Spec Z[x,y]_(1+xy) over small prime
// fields, under the reduced basepoint action tau.(x,y) = (tau x, tau^-1 y).

#include "merolib/holonomy.hpp"

#include <cstdio>

int main() {
  std::printf("%4s %6s %12s %10s %8s %8s %6s\n", "q", "total", "free orbits",
              "orbit size", "O_x", "O_y", "O_0");
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto c = mero::holonomy::hopf_orbit_census(q);
    std::printf("%4u %6llu %12llu %10llu %8llu %8llu %6llu\n", q,
                (unsigned long long)c.total, (unsigned long long)c.free_alpha_orbits,
                (unsigned long long)c.free_alpha_orbit_size,
                (unsigned long long)c.orbit_x_size, (unsigned long long)c.orbit_y_size,
                (unsigned long long)c.fixed_points);
  }
  return 0;
}
