#include <iostream>

#include "singulus/cli.hpp"

int main(int argc, char** argv) { return singulus::cli::run(argc, argv, std::cout, std::cerr); }
