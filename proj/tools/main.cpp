#include <iostream>

#include "totalchoose/cli.hpp"

int main(int argc, char** argv) {
  return totalchoose::cli_main({argv + 1, argv + argc}, std::cout, std::cerr);
}
