#include <iostream>
#include <string>
#include <vector>

#include "zgr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zgr::run_command(args, std::cout, std::cerr);
}
