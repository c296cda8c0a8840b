#include <iostream>
#include <string>
#include <vector>

#include "vphi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vphi::cli::run(args, std::cout, std::cerr, std::cin);
}
