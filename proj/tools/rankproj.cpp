#include <iostream>

#include "rankproj/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rankproj::run_cli(args, std::cout, std::cerr);
}
