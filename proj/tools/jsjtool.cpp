#include <iostream>

#include "jsj/cli.hpp"

int main(int argc, char** argv) {
  return jsj::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
