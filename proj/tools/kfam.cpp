#include <iostream>
#include <string>
#include <vector>

#include "kfam/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kfam::run(args, std::cout, std::cerr);
}
