#include <iostream>
#include <string>
#include <vector>

#include "flagbundle/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = flagbundle::cli::run(args);
  std::cout << outcome.output;
  return outcome.exit_code;
}
