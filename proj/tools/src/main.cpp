#include <iostream>

#include "triplet_cli/cli.hpp"

int main(int argc, char** argv) { return triplet::cli::run(argc, argv, std::cout, std::cerr); }
