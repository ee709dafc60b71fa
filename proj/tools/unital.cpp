#include <iostream>

#include "unital/cli.hpp"

int main(int argc, char **argv) {
  return unital::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
