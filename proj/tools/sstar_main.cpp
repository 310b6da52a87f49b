#include <iostream>
#include <string>
#include <vector>

#include "sstar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sstar::run_cli(args, std::cout, std::cerr);
}
