#include <iostream>

#include "loose/cli.hpp"

int main(int argc, char **argv) {
  return loose::run_cli(argc, argv, std::cout, std::cerr);
}
