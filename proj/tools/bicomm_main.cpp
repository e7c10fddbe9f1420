#include <iostream>

#include "bicomm/cli.hpp"

int main(int argc, char** argv) {
  return bicomm::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
