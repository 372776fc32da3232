#pragma once

// Resource caps shared across modules. MEROLIB_CAPS can override the
// defaults, e.g. MEROLIB_CAPS="enum=1000000,deg=8,unit=2,walk=50000,pairs=10000".

#include "merolib/scalar.hpp"

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace mero {

struct Caps {
  std::uint64_t enumeration = 10'000'000;  // max |F_q^v| scanned per enumeration
  int degree = 6;                          // witness/cofactor degree cap
  int unit_multiplicity = 3;               // max total unit multiplicity in is_regular
  std::uint64_t walk = 200'000;            // max nodes visited in walk enumeration
  int pairs = 20'000;                      // max S-pairs processed by buchberger
  std::vector<std::uint32_t> primes = {3, 5, 7, 11};  // certificate hunt moduli

  static Caps from_env() {
    Caps caps;
    const char* env = std::getenv("MEROLIB_CAPS");
    if (env) caps.apply_spec(env);
    return caps;
  }

  void apply_spec(const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) continue;
      std::string key = item.substr(0, eq);
      std::string val = item.substr(eq + 1);
      if (key == "enum") enumeration = std::stoull(val);
      else if (key == "deg") degree = std::stoi(val);
      else if (key == "unit") unit_multiplicity = std::stoi(val);
      else if (key == "walk") walk = std::stoull(val);
      else if (key == "pairs") pairs = std::stoi(val);
      else throw exactalg::PreconditionError("unknown cap key: " + key);
    }
    if (enumeration == 0 || degree <= 0 || unit_multiplicity < 0 || walk == 0 || pairs <= 0)
      throw exactalg::PreconditionError("caps must be positive");
  }
};

}  // namespace mero
