#include <iostream>
#include <string>
#include <vector>

#include "hurzeta/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hurzeta::cli::main_entry(args, std::cout, std::cerr);
}
