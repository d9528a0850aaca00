#include <iostream>

#include "pbwos/cli.hpp"

int main(int argc, char** argv) { return pbwos::cli_main(argc, argv, std::cout, std::cerr); }
