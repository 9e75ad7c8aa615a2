#include <iostream>
#include <string>
#include <vector>

#include "ratknot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ratknot::run(args, std::cout, std::cerr);
}
