#include <iostream>

#include "udgdom/cli.hpp"

int main(int argc, char** argv) {
  return udgdom::cli::run(argc, argv, std::cout, std::cerr);
}
