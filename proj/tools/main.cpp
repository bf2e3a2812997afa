#include <iostream>

#include "diamgraph/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return diamgraph::cli_dispatch(argc, argv, std::cin, std::cout, std::cerr);
}
