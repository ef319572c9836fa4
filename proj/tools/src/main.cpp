#include <iostream>

#include "grpverify_cli/cli.hpp"

int main(int argc, char** argv) { return grpverify::cli::run(argc, argv, std::cout, std::cerr); }
