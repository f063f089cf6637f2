#include <iostream>

#include "homing/cli.hpp"

int main(int argc, char** argv) { return homing::run_cli(argc, argv, std::cout, std::cerr); }
