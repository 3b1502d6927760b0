#include <iostream>
#include <string>
#include <vector>

#include "barbell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return barbell::runCli(args, std::cout, std::cerr);
}
