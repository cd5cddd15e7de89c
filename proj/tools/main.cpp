#include <iostream>

#include "bcast/cli.hpp"

int main(int argc, char** argv) { return bcast::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
