#include <iostream>

#include "eulertop/cli.hpp"

int main(int argc, char** argv) { return eulertop::cli::run(argc, argv, std::cout, std::cerr); }
