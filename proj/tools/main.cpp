#include <iostream>
#include <string>
#include <vector>

#include "zweistein/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return zweistein::cli_main(args, std::cin, std::cout, std::cerr);
}
