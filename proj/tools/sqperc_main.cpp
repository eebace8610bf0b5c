#include <iostream>
#include <string>
#include <vector>

#include "sqperc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sqperc::run_cli(args, std::cout, std::cerr);
}
