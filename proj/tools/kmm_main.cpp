#include <iostream>
#include <vector>

#include "kmm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kmm::cli::run(args, std::cin, std::cout, std::cerr);
}
