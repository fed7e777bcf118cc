#include <iostream>

#include "rankwb/cli.hpp"

int main(int argc, char** argv) { return rankwb::cli::run(argc, argv, std::cout); }
