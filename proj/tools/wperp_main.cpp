#include <iostream>

#include "wperp/cli.hpp"

int main(int argc, char** argv) {
  return wperp::run_cli(argc, argv, std::cout, std::cerr);
}
