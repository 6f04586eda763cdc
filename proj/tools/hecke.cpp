#include <iostream>

#include "hecke/cli.hpp"

int main(int argc, char** argv) { return hecke::cli::main(argc, argv, std::cout, std::cerr); }
