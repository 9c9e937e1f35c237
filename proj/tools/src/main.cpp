#include <iostream>

#include "cmif_cli/cli.hpp"

int main(int argc, char** argv) { return cmif::cli::run(argc, argv, std::cout, std::cerr); }
