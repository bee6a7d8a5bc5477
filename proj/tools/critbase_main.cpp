#include <iostream>
#include <string>
#include <vector>

#include "critbase/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return critbase::run(args, std::cout, std::cerr);
}
