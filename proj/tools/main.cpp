#include <iostream>
#include <vector>

#include "liecoh/cli.hpp"

int main(int argc, char** argv) {
  return liecoh::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
