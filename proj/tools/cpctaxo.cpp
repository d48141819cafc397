#include <iostream>

#include "cpctaxo/cli.hpp"

int main(int argc, char** argv) { return cpctaxo::cli::run(argc, argv, std::cout, std::cerr); }
