#include <iostream>

#include "oscint/cli.hpp"

int main(int argc, char** argv) { return oscint::run_cli(argc, argv, std::cout, std::cerr); }
