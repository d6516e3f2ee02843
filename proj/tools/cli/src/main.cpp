#include <iostream>

#include "spinon_cli/cli.hpp"

int main(int argc, char** argv) { return spinon::cli::main_entry(argc, argv, std::cout, std::cerr); }
