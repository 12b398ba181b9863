#include <iostream>

#include "dsd/cli.hpp"

int main(int argc, char** argv) {
  return dsd::cli::run(argc, argv, std::cout, std::cerr);
}
