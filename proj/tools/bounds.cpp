#include <cstdlib>
#include <iostream>

#include "effbounds/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace effbounds::cli;
  const ParseOutcome parsed = parse_args(argc, argv, std::getenv("BOUNDS_SEED"));
  if (!parsed.config) {
    (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message << "\n";
    return parsed.exit_code;
  }
  return run(*parsed.config, std::cout, std::cerr);
}
