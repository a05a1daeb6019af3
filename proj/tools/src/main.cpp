#include <cstdlib>
#include <iostream>

#include "nabt_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto outcome = nabt::cli::run(args, std::getenv("NABT_MAX_COSETS"));
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
