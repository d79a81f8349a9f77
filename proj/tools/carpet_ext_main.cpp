#include <iostream>
#include <vector>

#include "carpet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return carpet::cli::run(args, std::cout, std::cerr);
}
