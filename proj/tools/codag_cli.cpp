#include <iostream>

#include "codag/cli.hpp"

int main(int argc, char** argv) { return codag::cli_main(argc, argv, std::cout, std::cerr); }
