#include <iostream>
#include <string>
#include <vector>

#include "cdiff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cdiff::run_cli(args, std::cout, std::cerr);
}
