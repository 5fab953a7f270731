#include <iostream>

#include "toricfil/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricfil::run_cli(args, std::cout, std::cerr);
}
