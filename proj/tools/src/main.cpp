#include <iostream>  // for cin, cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "binsys/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return binsys::cli::run(args, std::cin, std::cout, std::cerr);
}
