#include <iostream>
#include <string>
#include <vector>

#include "combrec/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return combrec::RunCli(args, std::cin, std::cout, std::cerr);
}
