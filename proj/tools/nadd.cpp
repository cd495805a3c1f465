#include <iostream>

#include "nadd/cli.hpp"

int main(int argc, char** argv) { return nadd::cli::run(argc, argv, std::cout, std::cerr); }
