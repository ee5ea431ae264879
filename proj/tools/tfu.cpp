#include <iostream>

#include "tfu/cli.hpp"

int main(int argc, char** argv) { return tfu::run_cli(argc, argv, std::cout, std::cerr); }
