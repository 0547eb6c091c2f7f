#include <iostream>
#include <string>
#include <vector>

#include "capset_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return capset::cli::run(args, std::cout, std::cerr);
}
