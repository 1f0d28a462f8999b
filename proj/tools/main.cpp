#include "socdyn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return socdyn::cli::run(argc, argv, std::cout, std::cerr);
}
