#include <iostream>

#include "hypfn/cli/commands.hpp"

int main(int argc, char** argv) { return hypfn::cli::run(argc, argv, std::cout, std::cerr); }
