#include <iostream>

#include "fermi1d/commands.hpp"

int main(int argc, char** argv) { return fermi1d::run_cli(argc, argv, std::cout, std::cerr); }
