#include <iostream>

#include "sgfr/cli.hpp"

int main(int argc, char** argv) { return sgfr::cli::run(argc, argv, std::cout, std::cerr); }
