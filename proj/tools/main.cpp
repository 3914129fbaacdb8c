#include "massbind/cli.hpp"

#include <iostream>

int main(int argc, char* argv[]) {
  return massbind::main_entry(argc, argv, std::cout, std::cerr);
}
