#include <iostream>
#include <string>
#include <vector>

#include "sumdiff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sumdiff::cli::run(args, std::cout, std::cerr);
}
