#include <iostream>
#include <string>
#include <vector>

#include "vb1/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vb1::run_cli(args, std::cout, std::cerr);
}
