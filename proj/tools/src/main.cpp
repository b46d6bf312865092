#include <iostream>
#include <string>
#include <vector>

#include "vacfluct_cli/app.hpp"

int main(int argc, char **argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return vacfluct::cli::run(args, std::cout, std::cerr);
}
