#include <iostream>

#include "oscc/cli.hpp"

int main(int argc, char** argv) {
  return oscc::cli::run(argc, argv, std::cout, std::cerr);
}
