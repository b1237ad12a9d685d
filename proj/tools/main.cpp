#include <iostream>
#include <vector>

#include "turanwheel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tw::cli::run(std::move(args), std::cout, std::cerr, std::cin);
}
