#include <iostream>

#include "hott/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hott::cli::run(args, std::cout, std::cerr);
}
