#include "circtree/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return circtree::cli::run(argc, argv, std::cout, std::cerr); }
