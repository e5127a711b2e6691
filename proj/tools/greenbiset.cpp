#include <iostream>

#include "greenbiset/cli.hpp"

int main(int argc, char** argv) { return gb::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr); }
