#include <iostream>
#include <string>
#include <vector>

#include "lognls/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lognls::run_cli(args, std::cout, std::cerr);
}
