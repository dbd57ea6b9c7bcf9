#include <iostream>
#include <string>
#include <vector>

#include "quadboard/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return quadboard::cli::main(args, std::cout, std::cerr);
}
