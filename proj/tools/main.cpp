#include <iostream>
#include <string>
#include <vector>

#include "bcg/cli.hpp"

int main(int argc, char** argv) {
  std::cout << std::unitbuf;
  std::vector<std::string> args(argv + 1, argv + argc);
  return bcg::run_cli(args, std::cout, std::cerr);
}
