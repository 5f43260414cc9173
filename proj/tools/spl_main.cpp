#include <iostream>

#include "spl/cli.hpp"

int main(int argc, char** argv) { return spl::cli::run(argc, argv, std::cout, std::cerr); }
