#include <iostream>
#include <string>
#include <vector>

#include "sumdiff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sumdiff::cli_dispatch(args, std::cout, std::cerr);
}
