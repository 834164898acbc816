#include <iostream>

#include "cliffrep/cli.hpp"

int main(int argc, char** argv) {
  return cliffrep::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
