#include <iostream>

#include "ptwave/cli.hpp"

int main(int argc, char** argv) {
  return ptwave::cli::run(argc, argv, std::cout, std::cerr);
}
