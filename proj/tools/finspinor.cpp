#include <iostream>

#include "finspinor/cli.hpp"

int main(int argc, char** argv) { return finspinor::cli::run(argc, argv, std::cout, std::cerr); }
