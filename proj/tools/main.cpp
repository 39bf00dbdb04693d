// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The fbff Authors

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fbff::cli::run(args, std::cin, std::cout, std::cerr);
}
