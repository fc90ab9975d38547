#include <iostream>
#include <string>
#include <vector>

#include "freesimplex/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return freesimplex::cli::run(args, std::cout, std::cerr);
}
