#include <iostream>

#include "segsub/cli.hpp"

int main(int argc, char** argv) { return segsub::cli::dispatch(argc, argv, std::cout, std::cerr); }
