#include <iostream>
#include <string>
#include <vector>

#include "prefdist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return prefdist::cli::run(args, std::cout, std::cerr);
}
