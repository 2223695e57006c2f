#include <iostream>
#include <string>
#include <vector>

#include "dihedra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dihedra::cli::dispatch(args, std::cout, std::cerr);
}
