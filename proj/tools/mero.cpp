#include "merolib/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = mero::cli::dispatch(args);
  if (result.format == "table") {
    std::cout << mero::io::table_string(result.report);
  } else {
    std::cout << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}
