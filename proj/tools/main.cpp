#include <iostream>
#include <string>
#include <vector>

#include "oraclebench/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oraclebench::cli::run(args, std::cout, std::cerr);
}
