#include <iostream>
#include <string>
#include <vector>

#include "kothedim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kothedim::cli_main(args, std::cout, std::cerr);
}
