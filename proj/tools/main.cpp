#include <iostream>
#include <string>
#include <vector>

#include "binomrep/cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return binomrep::cli::run(args, std::cout, std::cerr);
}
