#include <iostream>
#include <string>
#include <vector>

#include "abelocus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return abelocus::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return abelocus::cli::kExitInternal;
  }
}
