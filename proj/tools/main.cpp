#include <iostream>
#include <string>
#include <vector>

#include "gstlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gstlab::run(args, std::cout, std::cerr);
}
