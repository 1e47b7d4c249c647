#include <iostream>

#include "wreathgap/cli.hpp"

int main(int argc, char** argv) {
  return wreathgap::cli::dispatch(argc, argv, std::cout, std::cerr);
}
