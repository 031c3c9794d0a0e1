#include <iostream>
#include <vector>

#include "rcc8seq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rcc8seq::run_cli(std::move(args), std::cout, std::cerr);
}
