#include <iostream>

#include "modrad/cli.hpp"

int main(int argc, char** argv) {
  return modrad::cli::run(argc, argv, std::cout, std::cerr);
}
