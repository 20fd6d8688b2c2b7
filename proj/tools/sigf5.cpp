#include <iostream>
#include <string>
#include <vector>

#include "sigf5/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return sigf5::cli::run(args, std::cout, std::cerr);
}
