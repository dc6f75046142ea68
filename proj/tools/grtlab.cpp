#include <iostream>

#include "grt/cli.hpp"

int main(int argc, char** argv) { return grt::run_cli(argc, argv, std::cout, std::cerr); }
