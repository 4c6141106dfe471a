#include <iostream>
#include <vector>

#include "caysum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return caysum::run_cli(args, std::cout, std::cerr);
}
