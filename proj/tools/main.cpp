#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "sigstack/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sigstack::run_cli(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
