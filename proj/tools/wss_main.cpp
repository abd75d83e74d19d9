#include <iostream>

#include "wss/cli.hpp"

int main(int argc, char** argv) { return wss::cli_main(argc, argv, std::cout, std::cerr); }
