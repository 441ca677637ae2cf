#include <iostream>

#include "ptower/cli/run.hpp"

int main(int argc, char** argv) {
  return ptower::cli::run_cli(argc, argv, std::cout, std::cerr);
}
