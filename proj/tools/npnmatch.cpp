// SPDX-License-Identifier: Apache-2.0

#include "npnmatch/Cli.h"

#include <iostream>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return npn::cliDispatch(args, std::cout, std::cerr);
}
