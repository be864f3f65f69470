#include <iostream>

#include "zetalab/cli.hpp"

int main(int argc, char** argv) { return zetalab::cli::run(argc, argv, std::cout, std::cerr); }
