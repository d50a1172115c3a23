#include "symnorm/cli.hpp"

#include <iostream>

int main(int argc, const char** argv) {
  return symnorm::run_cli(argc, argv, std::cout, std::cerr);
}
