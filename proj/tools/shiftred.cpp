#include <iostream>

#include "shiftred/cli.hpp"

int main(int argc, char** argv)
{
  return shiftred::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
