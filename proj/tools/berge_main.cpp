#include <iostream>

#include "berge/cli.hpp"

int main(int argc, char** argv) { return berge::run_cli(argc, argv, std::cout, std::cerr); }
