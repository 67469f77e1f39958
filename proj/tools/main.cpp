#include <iostream>
#include <string>
#include <vector>

#include "cepd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cepd::run(args, std::cout, std::cerr);
}
