#include <iostream>

#include "pdalg/cli.hpp"

int main(int argc, char** argv) { return pdalg::run_cli(argc, argv, std::cout, std::cerr); }
