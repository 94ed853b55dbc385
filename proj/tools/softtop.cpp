#include <iostream>

#include "softtop/cli.hpp"

int main(int argc, char** argv) { return softtop::run_cli(argc, argv, std::cout, std::cerr); }
