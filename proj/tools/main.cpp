#include <iostream>
#include <string>
#include <vector>

#include "cheeger/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cheeger::cli::run(std::move(args), std::cout, std::cerr);
}
