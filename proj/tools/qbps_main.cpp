#include <iostream>
#include <vector>

#include "qbps/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qbps::run_cli(args, std::cout, std::cerr);
}
