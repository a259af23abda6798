#include <iostream>
#include <vector>

#include "catgal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return catgal::cli::run(args, std::cout, std::cerr);
}
