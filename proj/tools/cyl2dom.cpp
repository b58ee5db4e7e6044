#include <iostream>

#include "cyl2dom/cli.hpp"

int main(int argc, char** argv) { return cyl2dom::cli::cmd_dispatch(argc, argv, std::cout, std::cerr); }
