#include <iostream>
#include <string>
#include <vector>

#include "liebranch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liebranch::cli::run(args, std::cout, std::cerr);
}
