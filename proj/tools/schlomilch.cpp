#include <iostream>

#include "schlomilch/cli.hpp"

int main(int argc, char** argv) {
  return schlomilch::cli::run(argc, argv, std::cout, std::cerr);
}
