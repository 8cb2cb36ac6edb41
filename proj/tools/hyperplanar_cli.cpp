#include <iostream>

#include "hyperplanar/cli.hpp"

int main(int argc, char** argv) { return hyperplanar::cli_main(argc, argv, std::cout, std::cerr); }
