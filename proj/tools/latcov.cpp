#include <iostream>

#include "latcov/cli/app.hpp"

int main(int argc, char** argv) { return latcov::cli::run(argc, argv, std::cout, std::cerr); }
