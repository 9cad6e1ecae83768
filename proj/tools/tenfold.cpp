#include "tenfold/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tenfold::run_cli(argc, argv, std::cout, std::cerr); }
