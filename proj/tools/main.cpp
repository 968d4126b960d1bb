#include <iostream>
#include <string>
#include <vector>

#include "minsurf/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return minsurf::cli::run(args, std::cout, std::cerr);
}
