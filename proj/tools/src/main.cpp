#include <iostream>

#include "sl2idem_cli/cli.hpp"

int main(int argc, char** argv) { return sl2idem::cli::run(argc, argv, std::cout, std::cerr); }
