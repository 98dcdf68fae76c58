#include <iostream>

#include "quinfield/cli.hpp"

int main(int argc, char** argv) {
  return quinfield::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
