#include <iostream>

#include "qdesigns/cli.hpp"

int main(int argc, char** argv) {
  return qdesigns::run_cli(argc, argv, std::cout, std::cerr);
}
