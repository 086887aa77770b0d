#include <iostream>

#include "mellinop/cli.hpp"

int main(int argc, char** argv) { return mellinop::cli::run(argc, argv, std::cout, std::cerr); }
