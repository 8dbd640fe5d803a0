#include <iostream>
#include <string>
#include <vector>

#include "divbound_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return divbound::cli::run(args, std::cout, std::cerr);
}
