#include <iostream>

#include "rcop/cli.hpp"

int main(int argc, char** argv) { return rcop::cli::run(argc, argv, std::cout, std::cerr); }
