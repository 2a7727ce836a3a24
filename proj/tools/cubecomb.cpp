#include <iostream>
#include <string>
#include <vector>

#include "cubecomb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cubecomb::run(args, std::cout, std::cerr);
}
