#include <iostream>

#include "crystal/cli.hpp"

int main(int argc, char** argv) {
  return crystal::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
