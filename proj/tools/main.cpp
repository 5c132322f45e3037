#include <iostream>
#include <string>
#include <vector>

#include "factorcover/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return fcover::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
