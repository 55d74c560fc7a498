#include <iostream>

#include "ffd/cli.hpp"

int main(int argc, char** argv) {
  return ffd::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
