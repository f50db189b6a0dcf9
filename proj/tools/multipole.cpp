#include <iostream>
#include <string>
#include <vector>

#include "multipole/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const multipole::cli::CommandResult result = multipole::cli::run(args);
  std::cout << result.out;
  if (!result.err.empty()) std::cerr << "multipole: " << result.err << '\n';
  return result.exit_code;
}
