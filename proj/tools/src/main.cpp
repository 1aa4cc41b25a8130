#include <iostream>
#include <string>
#include <vector>

#include "augframes_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return augframes::cli::run(args, std::cout, std::cerr);
}
