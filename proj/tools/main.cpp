#include "alcove/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return alcove::run(argc, argv, std::cout, std::cerr); }
