#include <iostream>

#include "hoc_cli/commands.hpp"

int main(int argc, char** argv) { return hoc::cli::run(argc, argv, std::cout, std::cerr); }
