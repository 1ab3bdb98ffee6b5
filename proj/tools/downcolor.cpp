#include <iostream>
#include <string>
#include <vector>

#include "downcolor/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return downcolor::run_cli(args, std::cin, std::cout, std::cerr);
}
