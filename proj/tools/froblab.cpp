#include <iostream>
#include <string>
#include <vector>

#include "froblab_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return froblab::cli::run(args, std::cout, std::cerr);
}
