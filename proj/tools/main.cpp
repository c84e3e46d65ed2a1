#include <iostream>

#include "affiliation/cli.hpp"

int main(int argc, char** argv) {
  return affiliation::cli::main(argc, argv, std::cout, std::cerr);
}
