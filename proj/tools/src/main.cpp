#include <iostream>

#include "torushom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return torushom::cli::run(args, std::cout, std::cerr, torushom::cli::environment_from_process());
}
