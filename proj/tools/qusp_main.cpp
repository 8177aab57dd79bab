#include <iostream>

#include "qusp/cli.hpp"

int main(int argc, char** argv) { return qusp::cli::main_entry(argc, argv, std::cout, std::cerr); }
