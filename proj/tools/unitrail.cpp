#include <iostream>

#include "unitrail/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return unitrail::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
