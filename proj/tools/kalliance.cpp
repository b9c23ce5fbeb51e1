#include <iostream>

#include "kalliance/cli.hpp"

int main(int argc, char** argv) { return kalliance::cli_main(argc, argv, std::cout, std::cerr); }
