#include <iostream>
#include <string>
#include <vector>

#include "foxcolor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return foxcolor::run_cli(args, std::cin, std::cout, std::cerr);
}
