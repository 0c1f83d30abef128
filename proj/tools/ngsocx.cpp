#include <iostream>

#include "ngsocx/cli.hpp"

int main(int argc, char** argv) { return ngsocx::run_cli(argc, argv, std::cout, std::cerr); }
