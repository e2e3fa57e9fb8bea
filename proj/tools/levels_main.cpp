#include <iostream>

#include "levels/cli.hpp"

int main(int argc, char** argv) { return levels::cli::run(argc, argv, std::cout, std::cerr); }
